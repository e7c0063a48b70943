// evolab: evolutes of polygons and spacial curves from the command line.
//
//   evolab evolute     --m 3 --n 7 --seed 5        (or --input polygon.json)
//   evolab spectrum    --m 3 --n 7 --trials 100
//   evolab iterate     --m 3 --n 7 --seed 5 --steps 60
//   evolab hypocycloid --r 0.7 --k 5/2 --steps 1
//   evolab verify      pentagon
//
// Files go to --out, else $EVOLAB_OUT, else the working directory.
// Exit codes: 0 success, 1 verification or computation failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evolab/curves.hpp"
#include "evolab/errors.hpp"
#include "evolab/generators.hpp"
#include "evolab/io.hpp"
#include "evolab/iteration.hpp"
#include "evolab/suites.hpp"

namespace fs = std::filesystem;
using namespace evolab;

namespace
{

struct Options
{
    std::optional<int> m;
    std::optional<int> n;
    std::uint64_t seed = 1;
    int trials = 1;
    int steps = 0;
    double r = 0.7;
    std::string k = "3";
    int samples = 2048;
    std::string out;
    std::string format = "all";
    std::string input;
    std::string suite;
    Tolerances tol;
};

fs::path output_dir(Options const& o)
{
    if (!o.out.empty())
        return o.out;
    if (char const* env = std::getenv("EVOLAB_OUT"); env && *env)
        return env;
    return ".";
}

bool wants(Options const& o, char const* format)
{
    return o.format == "all" || o.format == format;
}

void emit(fs::path const& path, std::string const& text)
{
    write_text_file(path, text);
    std::cout << "wrote " << path.string() << '\n';
}

std::pair<int, int> parse_ratio(std::string const& text)
{
    int p = 0, q = 1;
    char slash = 0;
    std::istringstream is(text);
    is >> p;
    if (!is.eof())
        is >> slash >> q;
    if (is.fail() || !is.eof() || (slash && slash != '/'))
        throw Error(ErrorCode::InvalidParameter, "--k must be an integer or p/q, got '" + text + "'");
    if (q < 1)
        throw Error(ErrorCode::InvalidParameter, "--k denominator must be positive");
    int const g = std::gcd(p, q);
    return {p / g, q / g};
}

int dims(Options const& o, int& n)
{
    int const m = o.m.value_or(3);
    n = o.n.value_or(m + 4);
    return m;
}

//---------------------------------------------------------------------------//
int cmd_evolute(Options const& o)
{
    VertexPolygon p;
    if (!o.input.empty())
    {
        json const j = read_json_file(o.input);
        p = vertex_polygon_from_json(j);
    }
    else
    {
        int n;
        int const m = dims(o, n);
        Rng rng(o.seed);
        SphericalPolygon const v = random_spherical_polygon(m, n, rng, o.tol);
        p = random_polygon(v, rng, o.tol);
    }
    // Side directions are read off the polygon itself.
    Mat dirs(p.dim(), p.size());
    for (int j = 0; j < p.size(); ++j)
    {
        Vec const edge = p.vertex(j + 1) - p.vertex(j);
        if (edge.norm() == 0)
            throw Error(ErrorCode::InvalidParameter, "polygon has a zero-length side");
        dirs.col(j) = edge.normalized();
    }
    SphericalPolygon const v(dirs, o.tol);
    VertexPolygon const e = p_evolute_vertices(p);
    Mat centered = e.verts();
    centered.colwise() -= e.centroid();
    double const size = centered.colwise().norm().maxCoeff();
    double const scale = std::max(1.0, (p.verts().colwise() - p.centroid()).colwise().norm().maxCoeff());
    bool const point = size < 1e-9 * scale;

    fs::path const dir = output_dir(o);
    json poly = to_json(e);
    poly["point_polygon"] = point;
    poly["source"] = to_json(p);
    if (wants(o, "json"))
    {
        emit(dir / "evolute.json", poly.dump(2) + "\n");
        emit(dir / "evolute_matrix.json", to_json(evolute_matrix(v, o.tol)).dump(2) + "\n");
    }
    if (wants(o, "csv"))
    {
        std::ostringstream os;
        os << "index";
        for (int i = 0; i < e.dim(); ++i)
            os << ",x" << i;
        os << '\n';
        for (int j = 0; j < e.size(); ++j)
        {
            os << j;
            for (int i = 0; i < e.dim(); ++i)
                os << ',' << format_double(e.verts()(i, j));
            os << '\n';
        }
        emit(dir / "evolute.csv", os.str());
    }
    std::cout << "evolute of a " << p.size() << "-gon in R^" << p.dim()
              << (point ? ": point polygon\n" : "\n");
    return 0;
}

int cmd_spectrum(Options const& o)
{
    int n;
    int const m = dims(o, n);
    SpectrumOptions lenient;
    lenient.strict = false;
    Rng rng(o.seed);
    std::ostringstream csv;
    csv << "trial,kind,re1,im1,re2,im2,gap\n";
    json reports = json::array();
    int paired = 0;
    int with_zero = 0;
    int scalar = 0;
    for (int trial = 0; trial < o.trials; ++trial)
    {
        SphericalPolygon const v = random_spherical_polygon(m, n, rng, o.tol);
        Mat const m2 = second_evolute_matrix(v, o.tol);
        SpectrumReport const rep = spectrum(m2, lenient);
        Mat off = m2;
        off.diagonal().setZero();
        Vec const diag = m2.diagonal();
        bool const is_scalar = std::max(off.cwiseAbs().maxCoeff(), diag.maxCoeff() - diag.minCoeff())
                               < 1e-8 * std::abs(diag.mean());
        paired += rep.paired;
        with_zero += rep.zero_count > 0;
        scalar += is_scalar;
        for (auto const& pr : rep.pairs)
        {
            csv << trial << ",pair," << format_double(pr.first.real()) << ','
                << format_double(pr.first.imag()) << ',' << format_double(pr.second.real()) << ','
                << format_double(pr.second.imag()) << ',' << format_double(pr.gap) << '\n';
        }
        for (auto z : rep.residual_unpaired)
        {
            bool const zero = std::abs(z) == 0 || rep.zero_count > 0;
            csv << trial << ',' << (zero ? "zero" : "unpaired") << ',' << format_double(z.real())
                << ',' << format_double(z.imag()) << ",,,\n";
        }
        json j = to_json(rep);
        j["trial"] = trial;
        j["scalar"] = is_scalar;
        reports.push_back(std::move(j));
    }
    double const rate = o.trials ? static_cast<double>(paired) / o.trials : 0;
    json summary = {{"m", m},
                    {"n", n},
                    {"seed", o.seed},
                    {"trials", o.trials},
                    {"pairing_rate", rate},
                    {"with_zero_eigenvalue", with_zero},
                    {"scalar", scalar},
                    {"reports", reports}};
    fs::path const dir = output_dir(o);
    if (wants(o, "csv"))
        emit(dir / "spectrum.csv", csv.str());
    if (wants(o, "json"))
        emit(dir / "spectrum.json", summary.dump(2) + "\n");
    std::cout << "m=" << m << " n=" << n << ": pairing success " << paired << "/" << o.trials
              << ", zero eigenvalue in " << with_zero << ", scalar matrix in " << scalar << '\n';
    return 0;
}

int cmd_iterate(Options const& o)
{
    int n;
    int const m = dims(o, n);
    Rng rng(o.seed);
    SphericalPolygon const v = random_spherical_polygon(m, n, rng, o.tol);
    VertexPolygon const p0 = random_polygon(v, rng, o.tol);
    IterationTrace const trace = iterate(v, p0, o.steps, o.tol);
    ExportOptions ex;
    ex.csv = wants(o, "csv");
    ex.svg = wants(o, "svg");
    ex.json = wants(o, "json");
    for (auto const& path : export_trace(trace, output_dir(o), "iterate", ex))
        std::cout << "wrote " << path.string() << '\n';
    std::cout << "dominant " << to_string(trace.classification) << ' ' << trace.dominant.real();
    if (trace.dominant.imag() != 0)
        std::cout << (trace.dominant.imag() > 0 ? "+" : "") << trace.dominant.imag() << 'i';
    std::cout << ", " << trace.frames.size() << " frames";
    if (!trace.distance_same.empty())
        std::cout << ", last distances " << trace.distance_same.back() << " (same) "
                  << trace.distance_flipped.back() << " (flipped)";
    std::cout << '\n';
    return 0;
}

int cmd_hypocycloid(Options const& o)
{
    auto const [p, q] = parse_ratio(o.k);
    SampledCurve curve = hypocycloid(o.r, p, q, o.samples);
    fs::path const dir = output_dir(o);
    for (int step = 0; step <= o.steps; ++step)
    {
        std::string const stem = step == 0 ? "hypocycloid" : "hypocycloid_evolute" + std::to_string(step);
        if (wants(o, "csv"))
            emit(dir / (stem + ".csv"), curve_csv(curve));
        if (wants(o, "json"))
            emit(dir / (stem + ".json"), to_json(curve).dump(2) + "\n");
        if (wants(o, "obj"))
            emit(dir / (stem + ".obj"), curve_obj(curve));
        if (wants(o, "svg"))
            emit(dir / (stem + ".svg"), curve_svg(curve));
        std::cout << stem << ": " << curve.cusp_count() << " cusps\n";
        if (step < o.steps)
            curve = evolute_curve(curve);
    }
    return 0;
}

int cmd_verify(Options const& o)
{
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.m = o.m;
    cfg.n = o.n;
    cfg.steps = o.steps > 0 ? o.steps : 60;
    cfg.tol = o.tol;
    SuiteResult const r = run_suite(o.suite, cfg);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << '\n';
    for (auto const& [key, value] : r.metrics)
        std::cout << "  " << key << " = " << value << '\n';
    return r.passed ? 0 : 1;
}

int exit_code(ErrorCode c)
{
    switch (c)
    {
        case ErrorCode::InvalidParameter:
        case ErrorCode::Parse:
        case ErrorCode::Io:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"evolab: evolutes of polygons and spacial curves"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with flag values");
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", o.out, "output directory (default $EVOLAB_OUT or .)");
        sub->add_option("--tol.genericity", o.tol.genericity);
        sub->add_option("--tol.closure", o.tol.closure);
        sub->add_option("--tol.alignment", o.tol.alignment);
        sub->add_option("--tol.unit_norm", o.tol.unit_norm);
        sub->add_option("--tol.eigen_one", o.tol.eigen_one);
        sub->add_option("--tol.orthogonality", o.tol.orthogonality);
    };
    auto add_dims = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "ambient dimension")->check(CLI::Range(2, 16));
        sub->add_option("--n", o.n, "number of sides")->check(CLI::Range(4, 1000));
    };

    auto* evo = app.add_subcommand("evolute", "P-evolute of a polygon and the evolute matrix");
    add_common(evo);
    add_dims(evo);
    evo->add_option("--input", o.input, "polygon JSON with a \"vertices\" array of columns");
    evo->add_option("--format", o.format)->check(CLI::IsMember({"all", "json", "csv"}));

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the second-evolute matrix");
    add_common(spectrum_cmd);
    add_dims(spectrum_cmd);
    spectrum_cmd->add_option("--trials", o.trials)->check(CLI::Range(1, 100000));
    spectrum_cmd->add_option("--format", o.format)->check(CLI::IsMember({"all", "json", "csv"}));

    auto* iter = app.add_subcommand("iterate", "iterate the evolute and normalize");
    add_common(iter);
    add_dims(iter);
    iter->add_option("--steps", o.steps)->check(CLI::Range(0, 10000));
    iter->add_option("--format", o.format)->check(CLI::IsMember({"all", "json", "csv", "svg"}));

    auto* hypo = app.add_subcommand("hypocycloid", "spacial hypocycloid and its evolutes");
    add_common(hypo);
    hypo->add_option("--r", o.r, "latitude radius in (0, 1)");
    hypo->add_option("--k", o.k, "cusp parameter p or p/q, > 1");
    hypo->add_option("--steps", o.steps, "number of evolutes to take")->check(CLI::Range(0, 8));
    hypo->add_option("--samples", o.samples, "samples per traversal")->check(CLI::Range(8, 1 << 20));
    hypo->add_option("--format", o.format)->check(CLI::IsMember({"all", "json", "csv", "obj", "svg"}));

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    add_common(ver);
    add_dims(ver);
    ver->add_option("suite", o.suite, "suite name")->required();
    ver->add_option("--trials", o.trials)->check(CLI::Range(1, 100000));
    ver->add_option("--steps", o.steps)->check(CLI::Range(0, 10000));
    ver->footer("suites: pentagon hexagon spectrum pairing involute hypocycloid curves iterate");
    o.trials = 1;

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (*evo)
            return cmd_evolute(o);
        if (*spectrum_cmd)
            return cmd_spectrum(o);
        if (*iter)
            return cmd_iterate(o);
        if (*hypo)
            return cmd_hypocycloid(o);
        if (*ver)
        {
            if (ver->count("--trials") == 0)
                o.trials = 100;
            return cmd_verify(o);
        }
    }
    catch (Error const& e)
    {
        std::cerr << "evolab: " << e.what() << '\n';
        return exit_code(e.code());
    }
    catch (std::exception const& e)
    {
        std::cerr << "evolab: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
