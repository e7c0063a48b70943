#include "evolab/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "evolab/curves.hpp"
#include "evolab/errors.hpp"
#include "evolab/generators.hpp"
#include "evolab/iteration.hpp"

namespace evolab
{
namespace
{
using Clock = std::chrono::steady_clock;

//! Independent stream per (seed, m, n).
Rng stream(std::uint64_t seed, int m, int n)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(m),
                      static_cast<std::uint32_t>(n)};
    return Rng(seq);
}

std::vector<int> dims_or(SuiteConfig const& cfg, std::vector<int> fallback)
{
    return cfg.m ? std::vector<int>{*cfg.m} : fallback;
}

Vec gaussian(int dim, Rng& rng)
{
    std::normal_distribution<double> normal;
    Vec out(dim);
    for (int i = 0; i < dim; ++i)
        out[i] = normal(rng);
    return out;
}

double spread(VertexPolygon const& p)
{
    return std::max((p.verts().colwise() - p.centroid()).colwise().norm().maxCoeff(), 1e-300);
}

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

SuiteResult timed(std::string name, std::function<void(SuiteResult&)> body)
{
    SuiteResult r;
    r.name = std::move(name);
    auto const start = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}
}  // namespace

//---------------------------------------------------------------------------//
SuiteResult verify_pentagon(SuiteConfig const& cfg)
{
    return timed("pentagon", [&](SuiteResult& r) {
        double worst = 0;
        int count = 0;
        for (int m : dims_or(cfg, {2, 3, 4}))
        {
            int const n = m + 2;
            Rng rng = stream(cfg.seed, m, n);
            for (int trial = 0; trial < cfg.trials; ++trial)
            {
                SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
                Mat const m2 = second_evolute_matrix(v, cfg.tol);
                Vec const diag = m2.diagonal();
                double const scale = std::abs(diag.mean());
                Mat off = m2;
                off.diagonal().setZero();
                double const res = std::max(off.cwiseAbs().maxCoeff(),
                                            diag.maxCoeff() - diag.minCoeff())
                                   / scale;
                worst = std::max(worst, res);
                ++count;
            }
        }
        r.metrics["instances"] = count;
        r.metrics["max_residual"] = worst;
        r.passed = worst < 1e-8;
        r.summary = std::to_string(count) + " instances, max relative non-scalar part "
                    + sci(worst);
    });
}

SuiteResult verify_hexagon(SuiteConfig const& cfg)
{
    return timed("hexagon", [&](SuiteResult& r) {
        double worst = 0;
        int count = 0;
        for (int m : dims_or(cfg, {2, 3, 4}))
        {
            int const n = m + 3;
            Rng rng = stream(cfg.seed, m, n);
            for (int trial = 0; trial < cfg.trials; ++trial)
            {
                SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
                SphericalPolygon const u = dual(v, cfg.tol);
                VertexPolygon const p = random_polygon(v, rng, cfg.tol);
                VertexPolygon const e1 = p_evolute_vertices(p);
                VertexPolygon const e3
                    = from_double_dual(p_evolute_vertices(p_evolute_vertices(e1)));
                Vec const x1 = side_lengths(u, e1, cfg.tol).x();
                Vec const x3 = side_lengths(u, e3, cfg.tol).x();
                Vec const rej = x3 - (x3.dot(x1) / x1.squaredNorm()) * x1;
                worst = std::max(worst, rej.norm() / x3.norm());
                ++count;
            }
        }
        r.metrics["instances"] = count;
        r.metrics["max_residual"] = worst;
        r.passed = worst < 1e-8;
        r.summary = std::to_string(count) + " instances, max collinearity residual "
                    + sci(worst);
    });
}

SuiteResult verify_spectrum(SuiteConfig const& cfg)
{
    return timed("spectrum", [&](SuiteResult& r) {
        std::vector<std::pair<int, int>> configs;
        for (int m : dims_or(cfg, {2, 3}))
        {
            if (cfg.n)
                configs.emplace_back(m, *cfg.n);
            else
                for (int extra : {4, 5, 6})
                    configs.emplace_back(m, m + extra);
        }
        SpectrumOptions lenient;
        lenient.strict = false;
        int count = 0;
        int paired = 0;
        int zero_ok = 0;
        double max_gap = 0;
        double max_skew = 0;
        double max_skew_abs = 0;
        for (auto [m, n] : configs)
        {
            Rng rng = stream(cfg.seed, m, n);
            for (int trial = 0; trial < cfg.trials; ++trial)
            {
                SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
                SymplecticForm const form = symplectic_form(v, cfg.tol);
                SpectrumReport const rep = spectrum(second_evolute_matrix(v, cfg.tol), lenient);
                bool const odd = (n - m) % 2 != 0;
                paired += rep.paired && rep.max_gap < lenient.pair_tol;
                zero_ok += (rep.zero_count > 0) == odd;
                max_gap = std::max(max_gap, rep.max_gap);
                max_skew = std::max(
                    max_skew, relative_skew_hamiltonian_residual(form.omega, form.second_evolute));
                max_skew_abs = std::max(max_skew_abs,
                                        skew_hamiltonian_residual(form.omega, form.second_evolute));
                ++count;
            }
        }
        r.metrics["instances"] = count;
        r.metrics["paired"] = paired;
        r.metrics["pairing_rate"] = count ? static_cast<double>(paired) / count : 0;
        r.metrics["zero_consistent"] = zero_ok;
        r.metrics["max_gap"] = max_gap;
        r.metrics["max_skew_residual"] = max_skew;
        r.metrics["max_skew_residual_abs"] = max_skew_abs;
        r.passed = paired == count && zero_ok == count;
        r.summary = std::to_string(paired) + "/" + std::to_string(count) + " paired (max gap "
                    + sci(max_gap) + "), zero eigenvalue rule held on "
                    + std::to_string(zero_ok) + "/" + std::to_string(count)
                    + ", max relative skew-Hamiltonian residual " + sci(max_skew);
    });
}

SuiteResult verify_pairing(SuiteConfig const& cfg)
{
    return timed("pairing", [&](SuiteResult& r) {
        std::vector<std::pair<int, int>> const configs
            = cfg.m ? std::vector<std::pair<int, int>>{{*cfg.m, cfg.n.value_or(*cfg.m + 4)}}
                    : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 8}};
        Rng rng = stream(cfg.seed, 0, 0);
        double translation = 0, antisym = 0, orth = 0;
        double worst_cond = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < cfg.trials; ++trial)
        {
            auto [m, n] = configs[trial % configs.size()];
            SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
            SphericalPolygon const u = dual(v, cfg.tol);
            VertexPolygon const p = random_polygon(v, rng, cfg.tol);
            VertexPolygon const q = random_polygon(u, rng, cfg.tol);
            double const base = pairing(v, p, q, cfg.tol);
            double const scale = std::max(1.0, std::abs(base));
            double const moved_p = pairing(v, p.translated(gaussian(m, rng)), q, cfg.tol);
            double const moved_q = pairing(v, p, q.translated(gaussian(m, rng)), cfg.tol);
            translation = std::max({translation, std::abs(moved_p - base) / scale,
                                    std::abs(moved_q - base) / scale});
            double const back = pairing(u, q, as_double_dual(p), cfg.tol);
            antisym = std::max(antisym, std::abs(base + back) / scale);
            VertexPolygon const e = p_evolute_vertices(p);
            double const pe_scale = std::max(1.0, spread(p) * spread(e) * n);
            orth = std::max(orth, std::abs(pairing(v, p, e, cfg.tol)) / pe_scale);
            PairingMatrix const g = pairing_matrix(v, cfg.tol);
            worst_cond = std::min(worst_cond, g.sigma_min / g.sigma_max);
        }
        r.metrics["instances"] = cfg.trials;
        r.metrics["translation_residual"] = translation;
        r.metrics["antisymmetry_residual"] = antisym;
        r.metrics["orthogonality_residual"] = orth;
        r.metrics["min_sigma_ratio"] = worst_cond;
        r.passed = translation < 1e-9 && antisym < 1e-9 && orth < 1e-9 && worst_cond > 1e-8;
        r.summary = std::to_string(cfg.trials) + " instances, translation " + sci(translation)
                    + ", antisymmetry " + sci(antisym) + ", <P,EP> " + sci(orth)
                    + ", min sigma ratio " + sci(worst_cond);
    });
}

SuiteResult verify_involute(SuiteConfig const& cfg)
{
    return timed("involute", [&](SuiteResult& r) {
        std::vector<std::pair<int, int>> const even{{2, 4}, {2, 6}, {3, 5}, {3, 7}, {4, 6}};
        std::vector<std::pair<int, int>> const odd{{2, 5}, {2, 7}, {3, 6}, {3, 8}, {4, 7}};
        Rng rng = stream(cfg.seed, 1, 1);
        double worst = 0;
        int no_fixed = 0;
        for (int trial = 0; trial < cfg.trials; ++trial)
        {
            auto [m, n] = even[trial % even.size()];
            SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
            VertexPolygon const p = random_polygon(v, rng, cfg.tol);
            VertexPolygon const back = involute(v, p_evolute_vertices(p), cfg.tol);
            Mat diff = back.verts() - p.verts();
            diff.colwise() -= diff.rowwise().mean();
            worst = std::max(worst, diff.colwise().norm().maxCoeff() / std::max(1.0, spread(p)));
        }
        for (int trial = 0; trial < cfg.trials; ++trial)
        {
            auto [m, n] = odd[trial % odd.size()];
            SphericalPolygon const v = random_spherical_polygon(m, n, rng, cfg.tol);
            VertexPolygon const q = random_polygon(dual(v, cfg.tol), rng, cfg.tol);
            try
            {
                involute(q, cfg.tol);
            }
            catch (Error const& e)
            {
                no_fixed += e.code() == ErrorCode::NoFixedPoint;
            }
        }
        r.metrics["instances"] = 2 * cfg.trials;
        r.metrics["max_vertex_error"] = worst;
        r.metrics["no_fixed_point"] = no_fixed;
        r.passed = worst < 1e-8 && no_fixed == cfg.trials;
        r.summary = "even: max vertex error " + sci(worst) + " on " + std::to_string(cfg.trials)
                    + "; odd: NoFixedPoint on " + std::to_string(no_fixed) + "/"
                    + std::to_string(cfg.trials);
    });
}

//---------------------------------------------------------------------------//
SuiteResult verify_hypocycloid(SuiteConfig const&)
{
    return timed("hypocycloid", [&](SuiteResult& r) {
        double const radii[] = {0.7, 1 / std::sqrt(2.0)};
        struct K
        {
            int p, q;
        };
        K const ks[] = {{2, 1}, {3, 1}, {5, 2}};
        double match = 0, hyper = 0;
        bool cusps_ok = true;
        std::string cusp_text;
        for (double rad : radii)
        {
            for (K k : ks)
            {
                SampledCurve const h = hypocycloid(rad, k.p, k.q, 2048);
                FourierProfile rho;
                rho.q = k.q;
                rho.terms[k.p] = {2 / rad, 0};
                SampledCurve const b = build_curve({rad, k.q, 0}, rho, 2048);
                match = std::max(match, (b.points - h.points).cwiseAbs().maxCoeff());
                double const kk = static_cast<double>(k.p) / k.q;
                double const target = 1 / (kk * kk - 1);
                for (int j = 0; j < h.size(); ++j)
                {
                    double const x = h.points(0, j), y = h.points(1, j), z = h.points(2, j);
                    double const lhs = (kk * kk - 1) / (4 * rad * rad) * (x * x + y * y)
                                       - kk * kk / (4 * (1 - rad * rad)) * z * z;
                    hyper = std::max(hyper, std::abs(lhs - target));
                }
                cusps_ok = cusps_ok && h.cusp_count() == 2 * k.p && b.cusp_count() == 2 * k.p;
                if (rad == radii[0])
                {
                    cusp_text += (cusp_text.empty() ? "" : ", ") + std::to_string(k.p)
                                 + (k.q > 1 ? "/" + std::to_string(k.q) : std::string())
                                 + ":" + std::to_string(h.cusp_count());
                }
            }
        }
        double const r0 = 1 / std::sqrt(2.0);
        HomothetyCheck const hc = check_second_evolute_homothety(r0, 2, 2048);
        double const first = first_evolute_homothety(r0, 2);
        double const composed = first * first_evolute_homothety(std::sqrt(1 - r0 * r0), 2);
        r.metrics["profile_match"] = match;
        r.metrics["hyperboloid_residual"] = hyper;
        r.metrics["homothety"] = hc.coefficient;
        r.metrics["homothety_error"] = hc.max_error;
        r.metrics["composed_first_coefficients"] = composed;
        r.passed = match < 1e-12 && hyper < 1e-10 && cusps_ok && std::abs(hc.coefficient - 49) < 1e-12
                   && std::abs(composed - hc.coefficient) < 1e-9 && hc.max_error < 1e-7;
        r.summary = "profile match " + sci(match) + ", hyperboloid " + sci(hyper) + ", cusps {"
                    + cusp_text + "}, second homothety " + std::to_string(hc.coefficient)
                    + " with pointwise error " + sci(hc.max_error);
    });
}

SuiteResult verify_curves(SuiteConfig const& cfg)
{
    return timed("curves", [&](SuiteResult& r) {
        Rng rng = stream(cfg.seed, 3, 0);
        std::uniform_real_distribution<double> radius(0.3, 0.9);
        int const trials = cfg.trials;
        double antisym = 0, translation = 0, orth = 0;
        for (int trial = 0; trial < trials; ++trial)
        {
            LatitudeIndicatrix const g{radius(rng), 1, 0};
            SampledCurve const c = build_curve(g, random_profile(1, 6, rng), 2048);
            SampledCurve const d = build_curve(g.dual(), random_profile(1, 6, rng), 2048);
            double const cd = curve_pairing(c, d);
            antisym = std::max(antisym, std::abs(cd + curve_pairing(d, c)));
            SampledCurve moved = c;
            moved.points.colwise() += Eigen::Vector3d(gaussian(3, rng));
            translation = std::max(translation, std::abs(curve_pairing(moved, d) - cd));
            orth = std::max(orth, std::abs(curve_pairing(c, evolute_curve(c))));
        }
        r.metrics["instances"] = trials;
        r.metrics["antisymmetry_residual"] = antisym;
        r.metrics["translation_residual"] = translation;
        r.metrics["orthogonality_residual"] = orth;
        r.passed = antisym < 1e-8 && translation < 1e-8 && orth < 1e-8;
        r.summary = std::to_string(trials) + " profiles, antisymmetry " + sci(antisym)
                    + ", translation " + sci(translation) + ", <G,EG> " + sci(orth);
    });
}

//---------------------------------------------------------------------------//
IterationInstance find_iteration_instance(int m,
                                          int n,
                                          std::uint64_t start,
                                          DominantClass want,
                                          double min_ratio,
                                          double max_ratio,
                                          int max_tries)
{
    SpectrumOptions lenient;
    lenient.strict = false;
    for (int i = 0; i < max_tries; ++i)
    {
        std::uint64_t const seed = start + i;
        Rng rng = stream(seed, m, n);
        SphericalPolygon v = random_spherical_polygon(m, n, rng);
        SpectrumReport rep = spectrum(second_evolute_matrix(v), lenient);
        if (rep.dominant_class != want || !rep.paired)
            continue;
        double const ratio = rep.subdominant_modulus / std::abs(rep.dominant);
        if (ratio < min_ratio || ratio > max_ratio)
            continue;
        VertexPolygon p0 = random_polygon(v, rng);
        return IterationInstance{seed, std::move(v), std::move(p0), std::move(rep), ratio};
    }
    throw Error(ErrorCode::InvalidParameter, "no configuration with the requested spectrum");
}

SuiteResult verify_iteration(IterationInstance const& inst, int steps)
{
    return timed("iterate", [&](SuiteResult& r) {
        IterationTrace const trace = iterate(inst.v, inst.p0, steps);
        bool const flip = inst.report.dominant_class == DominantClass::RealNegative;
        auto const& conv = flip ? trace.distance_flipped : trace.distance_same;
        auto const& other = flip ? trace.distance_same : trace.distance_flipped;

        int first_below = -1;
        for (std::size_t k = 0; k < conv.size(); k += 2)
        {
            if (conv[k] < 1e-6)
            {
                first_below = static_cast<int>(k);
                break;
            }
        }
        // Contraction per double step, from the last 20 ratios above round-off.
        std::vector<double> ratios;
        for (std::size_t k = 0; k + 2 < conv.size(); k += 2)
            if (conv[k] > 1e-10 && conv[k + 2] > 1e-10)
                ratios.push_back(conv[k + 2] / conv[k]);
        if (ratios.size() > 20)
            ratios.erase(ratios.begin(), ratios.end() - 20);
        double log_sum = 0;
        for (double x : ratios)
            log_sum += std::log(x);
        double const empirical = ratios.empty() ? 0 : std::exp(log_sum / ratios.size());
        double const agreement = empirical > 0 ? std::max(empirical / inst.ratio, inst.ratio / empirical)
                                               : std::numeric_limits<double>::infinity();
        double const other_tail = other.empty() ? 0 : other.back();

        r.metrics["seed"] = static_cast<double>(inst.seed);
        r.metrics["dominant"] = inst.report.dominant.real();
        r.metrics["predicted_ratio"] = inst.ratio;
        r.metrics["empirical_ratio"] = empirical;
        r.metrics["first_step_below_1e-6"] = first_below;
        r.metrics["final_distance"] = conv.empty() ? 0 : conv.back();
        r.metrics["final_other_distance"] = other_tail;
        r.passed = first_below >= 0 && first_below + 2 <= steps && agreement <= 2
                   && other_tail > 1e-3;
        r.summary = std::string(to_string(inst.report.dominant_class)) + " dominant "
                    + sci(inst.report.dominant.real()) + ", "
                    + (flip ? "flipped" : "direct") + " distance below 1e-6 at step "
                    + std::to_string(first_below + 2) + ", ratio " + sci(empirical)
                    + " vs predicted " + sci(inst.ratio) + ", other distance stays "
                    + sci(other_tail);
    });
}

//---------------------------------------------------------------------------//
std::vector<std::string> suite_names()
{
    return {"pentagon", "hexagon", "spectrum", "pairing", "involute", "hypocycloid", "curves", "iterate"};
}

SuiteResult run_suite(std::string const& name, SuiteConfig const& cfg)
{
    if (name == "pentagon")
        return verify_pentagon(cfg);
    if (name == "hexagon")
        return verify_hexagon(cfg);
    if (name == "spectrum")
        return verify_spectrum(cfg);
    if (name == "pairing")
        return verify_pairing(cfg);
    if (name == "involute")
        return verify_involute(cfg);
    if (name == "hypocycloid")
        return verify_hypocycloid(cfg);
    if (name == "curves")
        return verify_curves(cfg);
    if (name == "iterate")
    {
        int const m = cfg.m.value_or(3);
        int const n = cfg.n.value_or(7);
        SuiteResult merged;
        merged.name = "iterate";
        merged.passed = true;
        for (auto want : {DominantClass::RealPositive, DominantClass::RealNegative})
        {
            auto const inst = find_iteration_instance(m, n, cfg.seed, want, 0.2, 0.6);
            SuiteResult const part = verify_iteration(inst, cfg.steps);
            std::string const prefix = std::string(to_string(want)) + ".";
            for (auto const& [key, value] : part.metrics)
                merged.metrics[prefix + key] = value;
            merged.passed = merged.passed && part.passed;
            merged.summary += (merged.summary.empty() ? "" : "; ") + part.summary;
            merged.seconds += part.seconds;
        }
        return merged;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown suite '" + name + "'");
}

}  // namespace evolab
