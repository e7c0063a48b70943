#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "evolab/curves.hpp"
#include "evolab/errors.hpp"
#include "evolab/generators.hpp"
#include "evolab/spectral.hpp"

using namespace evolab;

namespace
{
template<class F>
ErrorCode code_of(F&& f)
{
    try
    {
        f();
    }
    catch (Error const& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::Io;
}

FourierProfile harmonic(int j, double c, double s = 0, int q = 1)
{
    FourierProfile p;
    p.q = q;
    p.terms[j] = {c, s};
    return p;
}

FourierProfile mixed()
{
    FourierProfile p;
    p.terms[2] = {1.0, 0.2};
    p.terms[3] = {0.0, 0.5};
    p.terms[5] = {0.3, -0.1};
    return p;
}

//! Hypocycloid written out independently of the library.
Eigen::Vector3d hypo_point(double r, double k, double a)
{
    double const h = std::sqrt(1 - r * r);
    return {r * (std::sin((k - 1) * a) / (k - 1) + std::sin((k + 1) * a) / (k + 1)),
            r * (std::cos((k - 1) * a) / (k - 1) - std::cos((k + 1) * a) / (k + 1)),
            2 * h * std::sin(k * a) / k};
}

Mat centered(Mat m)
{
    m.colwise() -= m.rowwise().mean();
    return m;
}

//! Moments int rho, int rho cos a, int rho sin a over one traversal, by
//! trapezoid on a fine grid.
Eigen::Vector3d closure_moments(FourierProfile const& p)
{
    int const n = 4096;
    double const period = 2 * M_PI * p.q;
    Eigen::Vector3d out = Eigen::Vector3d::Zero();
    for (int j = 0; j < n; ++j)
    {
        double const a = period * j / n;
        double const v = p.value(a);
        out += Eigen::Vector3d(v, v * std::cos(a), v * std::sin(a)) * period / n;
    }
    return out;
}

int sign_changes(Vec const& f)
{
    int count = 0;
    int last = 0;
    int first = 0;
    for (int j = 0; j < f.size(); ++j)
    {
        int const s = f[j] > 0 ? 1 : (f[j] < 0 ? -1 : 0);
        if (s == 0)
            continue;
        if (!first)
            first = s;
        if (last && s != last)
            ++count;
        last = s;
    }
    return count + (last && first && last != first);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(ClosureProject, DropsConstantAndFirstHarmonic)
{
    EXPECT_TRUE(closure_project(harmonic(1, 1.0)).is_zero());
    FourierProfile const c2 = closure_project(harmonic(2, 1.0));
    ASSERT_EQ(c2.terms.size(), 1u);
    EXPECT_EQ(c2.terms.at(2), std::make_pair(1.0, 0.0));
}

TEST(ClosureProject, SeededProfileHasVanishingMoments)
{
    Rng rng(3);
    std::normal_distribution<double> normal;
    for (int q : {1, 2, 3})
    {
        FourierProfile raw;
        raw.q = q;
        for (int j = 0; j <= 4 * q; ++j)
            raw.terms[j] = {normal(rng), normal(rng)};
        FourierProfile const p = closure_project(raw);
        EXPECT_TRUE(p.is_closed());
        EXPECT_LT(closure_moments(p).cwiseAbs().maxCoeff(), 1e-12) << q;
        FourierProfile const again = closure_project(p);
        EXPECT_EQ(again.terms, p.terms);
    }
}

TEST(ClosureProject, ValidProfilesChangeSignAtLeastFourTimes)
{
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial)
    {
        FourierProfile const p = random_profile(1, 2 + trial % 6, rng);
        Vec f(2000);
        for (int j = 0; j < f.size(); ++j)
            f[j] = p.value(2 * M_PI * j / f.size());
        EXPECT_GE(sign_changes(f), 4);
    }
}

//---------------------------------------------------------------------------//
TEST(BuildCurve, CosineProfileIsHypocycloid)
{
    for (double r : {0.3, 0.7, 1 / std::sqrt(2.0)})
    {
        for (int k : {2, 3, 4})
        {
            SampledCurve const c = build_curve({r, 1, 0}, harmonic(k, 2 / r), 2048);
            double worst = 0;
            for (int j = 0; j < c.size(); ++j)
                worst = std::max(worst, (c.points.col(j) - hypo_point(r, k, c.u[j])).cwiseAbs().maxCoeff());
            EXPECT_LT(worst, 1e-12) << r << ' ' << k;
            EXPECT_EQ(c.cusp_count(), 2 * k);
        }
    }
}

TEST(BuildCurve, MatchesQuadratureOfProfileTimesTangent)
{
    LatitudeIndicatrix const g{0.55, 1, 0.3};
    FourierProfile const p = mixed();
    SampledCurve const c = build_curve(g, p, 1024);
    // Trapezoid of rho(a) gamma(a) r on a finer grid is spectrally accurate.
    int const fine = 8;
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    double const h = c.period / (c.size() * fine);
    double worst = 0;
    for (int j = 1; j <= c.size(); ++j)
    {
        for (int s = 0; s < fine; ++s)
        {
            double const a0 = c.u[j - 1] + s * h;
            acc += 0.5 * h * g.r * (p.value(a0) * g.tangent(a0) + p.value(a0 + h) * g.tangent(a0 + h));
        }
        Eigen::Vector3d const expect = Eigen::Vector3d(c.points.col(0)) + acc;
        Eigen::Vector3d const got = c.points.col(j % c.size());
        worst = std::max(worst, (got - expect).norm());
    }
    // Second-order trapezoid on a non-periodic segment: error O(h^2).
    EXPECT_LT(worst, 1e-5);
    // A whole period of the integrand closes to round-off.
    EXPECT_LT(acc.norm(), 1e-12);
}

TEST(BuildCurve, FrameAndIndicatrix)
{
    LatitudeIndicatrix const g{0.4, 2, 0.1};
    FourierProfile p;
    p.q = 2;
    p.terms[3] = {1.0, 0.0};
    p.terms[5] = {0.0, 0.4};
    SampledCurve const c = build_curve(g, p, 512);
    EXPECT_EQ(c.size(), 1024);
    for (int j = 0; j < c.size(); ++j)
    {
        Mat f(3, 3);
        f << c.T.col(j), c.N.col(j), c.B.col(j);
        EXPECT_LT((f.transpose() * f - Mat::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((Eigen::Vector3d(c.T.col(j)) - g.tangent(c.u[j])).norm(), 1e-15);
        EXPECT_NEAR(f.determinant(), 1, 1e-12);
    }
    EXPECT_EQ(c.cusp_count() % 2, 0);
}

TEST(BuildCurve, SigmaFlipsExactlyAtCusps)
{
    SampledCurve const c = build_curve({0.6, 1, 0}, mixed(), 1000);
    std::vector<int> flips;
    for (int j = 0; j < c.size(); ++j)
    {
        EXPECT_EQ(c.sigma[j], c.rho[j] > 0 ? 1 : -1);
        if (c.sigma[j] != c.sigma[(j + 1) % c.size()])
            flips.push_back(j);
    }
    EXPECT_EQ(flips, c.cusp_indices);
    for (double a : cusp_parameters(c))
        EXPECT_LT(std::abs(c.profile->value(a)), 1e-12);
}

TEST(BuildCurve, ZeroProfileIsPoint)
{
    FourierProfile zero;
    zero.terms[2] = {0.0, 0.0};
    SampledCurve const c = build_curve({0.5, 1, 0}, zero, 64);
    EXPECT_EQ(c.points.cwiseAbs().maxCoeff(), 0);
    EXPECT_EQ(c.cusp_count(), 0);
}

TEST(BuildCurve, Errors)
{
    LatitudeIndicatrix const g{0.5, 1, 0};
    EXPECT_EQ(code_of([&] { build_curve(g, harmonic(1, 1.0)); }), ErrorCode::ClosureViolation);
    EXPECT_EQ(code_of([&] { build_curve({1.2, 1, 0}, harmonic(2, 1.0)); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([&] { build_curve(g, harmonic(3, 1.0, 0, 2)); }), ErrorCode::InvalidParameter);

    // cos 2a - cos 4a touches zero at a = 0 without changing sign.
    FourierProfile touch;
    touch.terms[2] = {1.0, 0.0};
    touch.terms[4] = {-1.0, 0.0};
    EXPECT_EQ(code_of([&] { build_curve(g, touch); }), ErrorCode::NonSimpleZero);
    // 3 sin 2a - sin 6a = 4 sin^3 2a: triple zeros.
    FourierProfile cube;
    cube.terms[2] = {0.0, 3.0};
    cube.terms[6] = {0.0, -1.0};
    EXPECT_EQ(code_of([&] { build_curve(g, cube); }), ErrorCode::NonSimpleZero);
}

//---------------------------------------------------------------------------//
TEST(Frenet, GeodesicCurvatureIsRhoTau)
{
    for (double r : {0.35, 0.6, 0.85})
    {
        LatitudeIndicatrix const g{r, 1, 0};
        SampledCurve const c = build_curve(g, mixed(), 2048);
        auto const diag = frenet_diagnostics(c);
        double const kappa = std::sqrt(1 - r * r) / r;
        int checked = 0;
        for (int j = 0; j < c.size(); ++j)
        {
            if (diag[j].in_cusp_window)
                continue;
            ++checked;
            EXPECT_NEAR(diag[j].geodesic_curvature, kappa, 1e-8 * kappa) << j;
            EXPECT_NEAR(diag[j].curvature * std::abs(c.rho[j]), 1.0, 1e-8) << j;
        }
        EXPECT_GT(checked, c.size() / 2);
    }
}

TEST(Frenet, TorsionChangesSignAtCusps)
{
    SampledCurve const c = build_curve({0.6, 1, 0}, mixed(), 2048);
    auto const diag = frenet_diagnostics(c);
    int const n = c.size();
    ASSERT_GT(c.cusp_count(), 0);
    for (int j : c.cusp_indices)
    {
        int before = j, after = (j + 1) % n;
        while (diag[before].in_cusp_window)
            before = (before + n - 1) % n;
        while (diag[after].in_cusp_window)
            after = (after + 1) % n;
        EXPECT_LT(diag[before].torsion * diag[after].torsion, 0) << j;
    }
}

TEST(Frenet, CurvatureBlowsUpTowardCusp)
{
    SampledCurve const c = build_curve({0.6, 1, 0}, harmonic(2, 1.0), 4096);
    auto const diag = frenet_diagnostics(c, 0);
    // Cusp of cos 2a at a = pi/4; curvature grows like 1/|a - pi/4|.
    int const at = static_cast<int>(std::round(c.size() / 8.0));
    double const k_far = diag[at - 64].curvature;
    double const k_near = diag[at - 8].curvature;
    EXPECT_NEAR(k_near / k_far, 8.0, 0.2);
    EXPECT_EQ(code_of([&] { frenet_at(c, at); }), ErrorCode::CuspWindow);
    EXPECT_NO_THROW(frenet_at(c, at - 8));
}

TEST(Frenet, DualArcLengthRatioIsGeodesicCurvature)
{
    LatitudeIndicatrix const g{0.45, 1, 0};
    SampledCurve const c = build_curve(g, harmonic(3, 1.0), 2048);
    double len_t = 0, len_b = 0;
    for (int j = 0; j < c.size(); ++j)
    {
        int const next = (j + 1) % c.size();
        len_t += (c.T.col(next) - c.T.col(j)).norm();
        len_b += (c.B.col(next) - c.B.col(j)).norm();
    }
    EXPECT_NEAR(len_b / len_t, g.geodesic_curvature(), 1e-12);
}

TEST(Frenet, ModifiedFrenetEquationByFiniteDifferences)
{
    SampledCurve const c = build_curve({0.6, 1, 0}, mixed(), 4096);
    double const rmax = c.rho.cwiseAbs().maxCoeff();
    int const n = c.size();
    double worst = 0;
    for (int j = 0; j < n; ++j)
    {
        int const a = (j + n - 1) % n, b = (j + 1) % n;
        if (std::abs(c.rho[a]) < 0.05 * rmax || std::abs(c.rho[b]) < 0.05 * rmax)
            continue;
        double const dx = (c.points.col(b) - c.points.col(a)).norm();
        Vec const tx = (c.T.col(b) - c.T.col(a)) / dx;
        Vec const expect = c.sigma[j] / c.rho[j] * c.N.col(j);
        worst = std::max(worst, (tx - expect).norm() / expect.norm());
    }
    EXPECT_LT(worst, 1e-4);
}

//---------------------------------------------------------------------------//
TEST(EvoluteProfile, HarmonicMultipliers)
{
    for (double r : {0.2, 0.5, 0.9})
    {
        for (int k = 2; k < 12; ++k)
        {
            FourierProfile const e = evolute_profile(harmonic(k, 1.0, 0.5), {r, 1, 0});
            double const f = 1 - k * k / (1 - r * r);
            EXPECT_DOUBLE_EQ(e.terms.at(k).first, f);
            EXPECT_DOUBLE_EQ(e.terms.at(k).second, 0.5 * f);
            EXPECT_LT(f, 0);  // never zero: the map is a bijection for q = 1
        }
    }
}

TEST(EvoluteProfile, Linear)
{
    Rng rng(6);
    LatitudeIndicatrix const g{0.4, 1, 0};
    FourierProfile const a = random_profile(1, 7, rng), b = random_profile(1, 7, rng);
    FourierProfile const lhs = evolute_profile(a.scaled(2.5).plus(b.scaled(-1.5)), g);
    FourierProfile const rhs = evolute_profile(a, g).scaled(2.5).plus(evolute_profile(b, g).scaled(-1.5));
    for (auto const& [j, cs] : lhs.terms)
    {
        EXPECT_NEAR(cs.first, rhs.terms.at(j).first, 1e-13);
        EXPECT_NEAR(cs.second, rhs.terms.at(j).second, 1e-13);
    }
}

TEST(EvoluteCurve, AgreesWithCurveOfEvoluteProfile)
{
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial)
    {
        LatitudeIndicatrix const g{0.3 + 0.1 * trial, 1, 0.2 * trial};
        FourierProfile const p = random_profile(1, 6, rng);
        SampledCurve const e = evolute_curve(build_curve(g, p, 2048));
        SampledCurve const direct = build_curve(g.dual(), evolute_profile(p, g), 2048);
        EXPECT_LT((centered(e.points) - centered(direct.points)).cwiseAbs().maxCoeff(), 1e-8);
        EXPECT_LT((e.T - direct.T).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((e.N - direct.N).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((e.B - direct.B).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(EvoluteCurve, VelocityIsPhiOverTauAlongBinormal)
{
    LatitudeIndicatrix const g{0.65, 1, 0};
    SampledCurve const c = build_curve(g, mixed(), 2048);
    SampledCurve const e = evolute_curve(c);
    double const kappa = g.geodesic_curvature();
    // Phi / tau = rho + rho_ss with s = kappa t, from spectral derivatives of samples.
    Vec const rho_tt = periodic_derivative(c.rho, c.period, 2) / (g.r * g.r);
    Vec const phi_over_tau = c.rho + rho_tt / (kappa * kappa);
    Mat const vel = periodic_derivative_rows(e.points, e.period, 1);
    double const ds_du = kappa * g.r;
    double const scale = phi_over_tau.cwiseAbs().maxCoeff();
    for (int j = 0; j < c.size(); ++j)
    {
        Eigen::Vector3d const v = vel.col(j) / ds_du;
        Eigen::Vector3d const b = c.B.col(j);
        EXPECT_NEAR(v.dot(b), phi_over_tau[j], 1e-8 * scale) << j;
        EXPECT_LT((v - v.dot(b) * b).norm(), 1e-8 * scale) << j;
        EXPECT_NEAR(e.rho[j], phi_over_tau[j], 1e-8 * scale) << j;
    }
}

TEST(EvoluteCurve, HypocycloidEvoluteIsScaledDualHypocycloid)
{
    double const r = 1 / std::sqrt(2.0);
    int const k = 2;
    double const c7 = first_evolute_homothety(r, k);
    EXPECT_NEAR(c7, 7, 1e-13);
    SampledCurve const e = evolute_curve(hypocycloid(r, k));
    SampledCurve const swapped = hypocycloid(std::sqrt(1 - r * r), k);
    // Homothety composed with the reflection z -> -z.
    Mat expect = c7 * swapped.points;
    expect.row(2) *= -1;
    EXPECT_LT((centered(e.points) - centered(expect)).cwiseAbs().maxCoeff(), 1e-8);

    for (double rr : {0.3, 0.8})
    {
        for (int kk : {3, 4})
        {
            SampledCurve const ee = evolute_curve(hypocycloid(rr, kk));
            Mat ex = first_evolute_homothety(rr, kk) * hypocycloid(std::sqrt(1 - rr * rr), kk).points;
            ex.row(2) *= -1;
            EXPECT_LT((centered(ee.points) - centered(ex)).cwiseAbs().maxCoeff(), 1e-8 * ex.cwiseAbs().maxCoeff());
        }
    }
}

TEST(EvoluteCurve, CuspsBecomeRegularPoints)
{
    SampledCurve const c = build_curve({0.6, 1, 0}, mixed(), 2048);
    SampledCurve const e = evolute_curve(c);
    FourierProfile const rho_bar = *e.profile;
    double const scale = e.rho.cwiseAbs().maxCoeff();
    ASSERT_GT(c.cusp_count(), 0);
    for (double a : cusp_parameters(c))
        EXPECT_GT(std::abs(rho_bar.value(a)), 1e-3 * scale) << a;
}

TEST(EvoluteCurve, SphericalCurveHasPointEvolute)
{
    // With q = 2 and r = sqrt(3)/2 the harmonic a/2 has multiplier zero.
    LatitudeIndicatrix const g{std::sqrt(3.0) / 2, 2, 0};
    SampledCurve const c = build_curve(g, harmonic(1, 1.0, 0, 2), 512);
    SampledCurve const e = evolute_curve(c);
    Vec const center = e.points.rowwise().mean();
    EXPECT_LT((e.points.colwise() - center).cwiseAbs().maxCoeff(), 1e-12);
    double const radius = (c.points.col(0) - center).norm();
    for (int j = 0; j < c.size(); ++j)
        EXPECT_NEAR((c.points.col(j) - center).norm(), radius, 1e-12);
}

TEST(EvoluteCurve, SecondEvoluteHomothety)
{
    EXPECT_NEAR(second_evolute_homothety(1 / std::sqrt(2.0), 2), 49, 1e-12);
    for (double r : {0.3, 0.5, 0.8})
    {
        for (int k : {2, 3, 5})
        {
            double const composed = first_evolute_homothety(r, k) * first_evolute_homothety(std::sqrt(1 - r * r), k);
            EXPECT_NEAR(composed, second_evolute_homothety(r, k), 1e-9 * composed);
            HomothetyCheck const h = check_second_evolute_homothety(r, k, 2048);
            EXPECT_LT(h.max_error, 1e-7) << r << ' ' << k;
        }
    }
}

TEST(EvoluteCurve, FromSamplesMatchesLatitudeConstruction)
{
    LatitudeIndicatrix const g{0.5, 1, 0};
    SampledCurve const c = build_curve(g, mixed(), 1024);
    SampledCurve const s = curve_from_samples(c.T, c.rho, c.period);
    EXPECT_LT((centered(s.points) - centered(c.points)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((s.kappa.array() - g.geodesic_curvature()).abs().maxCoeff(), 1e-10);
    EXPECT_LT((s.B - c.B).cwiseAbs().maxCoeff(), 1e-12);
    SampledCurve const es = evolute_curve(s);
    SampledCurve const ec = evolute_curve(c);
    EXPECT_LT((centered(es.points) - centered(ec.points)).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT((es.rho - ec.rho).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_EQ(es.cusp_indices, ec.cusp_indices);
}

TEST(EvoluteCurve, GreatCircleHasVanishingTorsion)
{
    int const n = 256;
    Mat t(3, n);
    Vec rho(n);
    for (int j = 0; j < n; ++j)
    {
        double const u = 2 * M_PI * j / n;
        t.col(j) = Eigen::Vector3d(std::cos(u), std::sin(u), 0);
        rho[j] = std::cos(2 * u);
    }
    SampledCurve const c = curve_from_samples(t, rho, 2 * M_PI);
    EXPECT_EQ(code_of([&] { evolute_curve(c); }), ErrorCode::VanishingTorsion);
}

//---------------------------------------------------------------------------//
TEST(CurvePairing, Laws)
{
    Rng rng(8);
    LatitudeIndicatrix const g{0.55, 1, 0};
    SampledCurve const c = build_curve(g, random_profile(1, 6, rng), 2048);
    SampledCurve const d = build_curve(g.dual(), random_profile(1, 6, rng), 2048);
    double const cd = curve_pairing(c, d);
    EXPECT_GT(std::abs(cd), 1e-3);
    EXPECT_NEAR(curve_pairing(d, c), -cd, 1e-10);
    SampledCurve moved = c;
    moved.points.colwise() += Eigen::Vector3d(3, -1, 2);
    EXPECT_NEAR(curve_pairing(moved, d), cd, 1e-10);
    EXPECT_NEAR(curve_pairing(c, evolute_curve(c)), 0, 1e-10);

    // Same value as the integral of Gamma . dGamma_bar/ds ds.
    Mat const vel = periodic_derivative_rows(d.points, d.period, 1);
    double alt = 0;
    for (int j = 0; j < c.size(); ++j)
        alt += c.points.col(j).dot(vel.col(j)) * d.period / d.size();
    EXPECT_NEAR(alt, cd, 1e-9);

    EXPECT_EQ(code_of([&] { curve_pairing(c, c); }), ErrorCode::MismatchedIndicatrix);
}

//---------------------------------------------------------------------------//
TEST(Hypocycloid, CuspsAndHyperboloid)
{
    struct Case
    {
        int p, q, cusps;
    };
    for (Case k : {Case{2, 1, 4}, Case{3, 1, 6}, Case{5, 2, 10}, Case{7, 3, 14}})
    {
        double const r = 0.7;
        double const kk = static_cast<double>(k.p) / k.q;
        SampledCurve const c = hypocycloid(r, k.p, k.q, 2048);
        EXPECT_EQ(c.cusp_count(), k.cusps);
        EXPECT_NEAR(c.period, 2 * M_PI * k.q, 1e-15);
        double const h = std::sqrt(1 - r * r);
        for (int j = 0; j < c.size(); ++j)
        {
            double const x = c.points(0, j), y = c.points(1, j), z = c.points(2, j);
            double const lhs = (kk * kk - 1) / (4 * r * r) * (x * x + y * y) - kk * kk / (4 * h * h) * z * z;
            EXPECT_NEAR(lhs, 1 / (kk * kk - 1), 1e-10);
            EXPECT_LE(std::abs(z), 2 * h / kk + 1e-15);
        }
        // Cusps sit on the bounding planes at radius 2 k r / (k^2 - 1).
        for (double a : cusp_parameters(c))
        {
            Eigen::Vector3d const p = hypo_point(r, kk, a);
            EXPECT_NEAR(std::abs(p.z()), 2 * h / kk, 1e-12);
            EXPECT_NEAR(std::hypot(p.x(), p.y()), 2 * kk * r / (kk * kk - 1), 1e-12);
        }
    }
}

TEST(Hypocycloid, InvalidParameters)
{
    EXPECT_EQ(code_of([] { hypocycloid(1.5, 3); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { hypocycloid(0.5, 1); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { hypocycloid(0.5, 4, 2); }), ErrorCode::InvalidParameter);
}

TEST(CurveExport, Formats)
{
    SampledCurve const c = hypocycloid(0.7, 3, 1, 64);
    std::string const csv = curve_csv(c);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,x,y,z,rho,sigma");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
    std::string const obj = curve_obj(c);
    std::istringstream lines(obj);
    int vertices = 0, polylines = 0;
    for (std::string line; std::getline(lines, line);)
    {
        vertices += line.rfind("v ", 0) == 0;
        polylines += line.rfind("l ", 0) == 0;
    }
    EXPECT_EQ(vertices, 64);
    EXPECT_EQ(polylines, 1);
    std::string const svg = curve_svg(c);
    std::size_t circles = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1))
        ++circles;
    EXPECT_EQ(circles, 2u * 6u);
}
