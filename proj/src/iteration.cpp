#include "evolab/iteration.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evolab/io.hpp"

namespace evolab
{

VertexPolygon normalize(VertexPolygon const& p)
{
    Mat verts = p.verts();
    verts.colwise() -= p.centroid();
    double const radius = verts.colwise().norm().maxCoeff();
    if (!(radius > 0))
        throw Error(ErrorCode::PointPolygon, "cannot normalize a point polygon");
    return VertexPolygon(verts / radius);
}

double shape_distance(VertexPolygon const& a, VertexPolygon const& b)
{
    return (a.verts() - b.verts()).colwise().norm().maxCoeff();
}

IterationTrace iterate(SphericalPolygon const& v,
                       VertexPolygon const& p0,
                       int steps,
                       Tolerances const& tol)
{
    if (steps < 0)
        throw Error(ErrorCode::InvalidParameter, "negative step count");
    side_lengths(v, p0, tol);

    IterationTrace trace;
    trace.dim = v.dim();
    SpectrumOptions lenient;
    lenient.strict = false;
    SpectrumReport const report = spectrum(second_evolute_matrix(v, tol), lenient);
    trace.classification = report.dominant_class;
    trace.dominant = report.dominant;
    trace.subdominant_modulus = report.subdominant_modulus;

    trace.frames.push_back(normalize(p0));
    for (int k = 0; k < steps; ++k)
    {
        VertexPolygon next;
        try
        {
            next = p_evolute_vertices(trace.frames.back());
        }
        catch (Error const& e)
        {
            std::ostringstream os;
            std::string const what = e.what();
            os << "step " << k + 1 << ": " << what.substr(to_string(e.code()).size() + 2);
            throw Error(e.code(), os.str());
        }
        if (next.verts().cwiseAbs().maxCoeff() > 1e12)
        {
            std::ostringstream os;
            os << "step " << k + 1 << ": coordinates exceed 1e12";
            throw Error(ErrorCode::Divergence, os.str());
        }
        Mat centered = next.verts();
        centered.colwise() -= next.centroid();
        if (centered.colwise().norm().maxCoeff() < 1e-12)
        {
            std::ostringstream os;
            os << "step " << k + 1 << ": evolute collapsed to a point";
            throw Error(ErrorCode::PointPolygon, os.str());
        }
        trace.frames.push_back(normalize(next));
    }

    int const m = v.dim();
    for (std::size_t k = 0; k + 2 < trace.frames.size(); ++k)
    {
        VertexPolygon const later = trace.frames[k + 2].shifted(-m);
        VertexPolygon const& earlier = trace.frames[k];
        trace.distance_same.push_back(shape_distance(later, earlier));
        trace.distance_flipped.push_back(
            shape_distance(later, VertexPolygon(-earlier.verts())));
    }
    return trace;
}

VertexPolygon aligned_frame(IterationTrace const& trace, int k)
{
    return trace.frames.at(k).shifted(-(k / 2) * trace.dim);
}

//---------------------------------------------------------------------------//
std::string trace_csv(IterationTrace const& trace)
{
    std::ostringstream os;
    os << "step,distance_same,distance_flipped,classification\n";
    for (std::size_t k = 0; k < trace.distance_same.size(); ++k)
    {
        os << k << ',' << format_double(trace.distance_same[k]) << ','
           << format_double(trace.distance_flipped[k]) << ',' << to_string(trace.classification) << '\n';
    }
    return os.str();
}

namespace
{
char const* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string svg_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}
}  // namespace

std::string trace_svg(IterationTrace const& trace, std::vector<int> const& frames)
{
    // Each projection occupies a 400x400 panel mapping [-1.1, 1.1]^2.
    std::vector<std::pair<int, int>> planes{{0, 1}};
    if (trace.dim >= 3)
        planes.emplace_back(0, 2);
    double const panel = 400.0;
    double const half = 1.1;
    auto to_px = [&](double c) { return (c + half) / (2 * half) * panel; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << panel * planes.size() << "\" height=\"" << panel << "\" viewBox=\"0 0 "
       << panel * planes.size() << ' ' << panel << "\">\n";
    for (std::size_t p = 0; p < planes.size(); ++p)
    {
        auto [a, b] = planes[p];
        os << "  <g id=\"projection-" << "xyz"[a] << "xyz"[b] << "\" transform=\"translate("
           << panel * p << ",0)\">\n";
        os << "    <rect x=\"0\" y=\"0\" width=\"" << panel << "\" height=\"" << panel
           << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        for (std::size_t f = 0; f < frames.size(); ++f)
        {
            VertexPolygon const& poly = trace.frames.at(frames[f]);
            os << "    <path class=\"frame\" data-frame=\"" << frames[f] << "\" d=\"";
            for (int i = 0; i < poly.size(); ++i)
            {
                os << (i == 0 ? 'M' : 'L') << svg_number(to_px(poly.verts()(a, i))) << ' '
                   << svg_number(panel - to_px(poly.verts()(b, i))) << ' ';
            }
            os << "Z\" fill=\"none\" stroke=\"" << palette[f % 6]
               << "\" stroke-width=\"1\"/>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string trace_json(IterationTrace const& trace)
{
    json j;
    j["dim"] = trace.dim;
    j["classification"] = to_string(trace.classification);
    j["dominant"] = {trace.dominant.real(), trace.dominant.imag()};
    j["subdominant_modulus"] = trace.subdominant_modulus;
    j["frames"] = json::array();
    for (auto const& f : trace.frames)
        j["frames"].push_back(to_json(f));
    j["distance_same"] = trace.distance_same;
    j["distance_flipped"] = trace.distance_flipped;
    return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> export_trace(IterationTrace const& trace,
                                                std::filesystem::path const& dir,
                                                std::string const& stem,
                                                ExportOptions const& opts)
{
    std::vector<std::filesystem::path> written;
    auto emit = [&](std::string const& ext, std::string const& text) {
        auto path = dir / (stem + ext);
        write_text_file(path, text);
        written.push_back(path);
    };
    if (opts.csv)
        emit(".csv", trace_csv(trace));
    if (opts.svg)
    {
        std::vector<int> frames = opts.svg_frames;
        if (frames.empty())
            for (std::size_t k = 0; k < trace.frames.size(); ++k)
                frames.push_back(static_cast<int>(k));
        emit(".svg", trace_svg(trace, frames));
    }
    if (opts.json)
        emit(".json", trace_json(trace));
    return written;
}

}  // namespace evolab
