#include "evolab/curves.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "evolab/errors.hpp"
#include "evolab/io.hpp"
#include "evolab/spectral.hpp"

namespace evolab
{
namespace
{
using V3 = Eigen::Vector3d;

double sin_integral(double beta, double c, double a)
{
    return std::sin(beta * a + c) / beta;
}

double cos_integral(double beta, double c, double a)
{
    return -std::cos(beta * a + c) / beta;
}

//! Antiderivative of rho(a) gamma(a) r, term by term.
V3 integrate_terms(LatitudeIndicatrix const& g, FourierProfile const& rho, double a)
{
    double const r = g.r;
    double const h = g.height();
    double const phi = g.phase;
    V3 out = V3::Zero();
    for (auto const& [j, cs] : rho.terms)
    {
        double const w = rho.frequency(j);
        std::pair<double, double> const parts[]
            = {{cs.first, 0.0}, {cs.second, -M_PI / 2}};
        for (auto const& [amp, psi] : parts)
        {
            if (amp == 0)
                continue;
            out[0] += 0.5 * amp * r * r
                      * (sin_integral(w + 1, phi + psi, a) + sin_integral(1 - w, phi - psi, a));
            out[1] += 0.5 * amp * r * r
                      * (cos_integral(w + 1, phi + psi, a) + cos_integral(1 - w, phi - psi, a));
            out[2] += amp * r * h * sin_integral(w, psi, a);
        }
    }
    return out;
}

void assign_signs(SampledCurve& c)
{
    int const n = c.size();
    double const zero = 1e-14 * c.rho.cwiseAbs().maxCoeff();
    c.sigma.assign(n, 1);
    c.cusp_indices.clear();
    int first = -1;
    for (int j = 0; j < n && first < 0; ++j)
        if (std::abs(c.rho[j]) > zero)
            first = j;
    if (first < 0)
        return;
    // Walk backwards so zero samples inherit the sign of the next sample.
    int current = c.rho[first] > 0 ? 1 : -1;
    for (int step = 0; step < n; ++step)
    {
        int const j = wrap(first - step, n);
        if (std::abs(c.rho[j]) > zero)
            current = c.rho[j] > 0 ? 1 : -1;
        c.sigma[j] = current;
    }
    for (int j = 0; j < n; ++j)
        if (c.sigma[j] != c.sigma[wrap(j + 1, n)])
            c.cusp_indices.push_back(j);
}

Mat cross_columns(Mat const& a, Mat const& b)
{
    Mat out(3, a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.col(j) = V3(a.col(j)).cross(V3(b.col(j)));
    return out;
}

Vec cumulative(Vec const& speed, double period)
{
    int const n = static_cast<int>(speed.size());
    double const mean = speed.mean();
    // The mean is removed above; round-off left in it is irrelevant.
    Vec t = periodic_antiderivative(speed.array() - mean, period, std::numeric_limits<double>::infinity());
    for (int j = 0; j < n; ++j)
        t[j] += mean * period * j / n;
    return t;
}

void check_simple_zeros(SampledCurve const& c, FourierProfile const& rho)
{
    int const n = c.size();
    double const h = c.period / n;
    double dmax = 0;
    for (int j = 0; j < n; ++j)
        dmax = std::max(dmax, std::abs(rho.value(c.u[j], 1)));
    double const rmax = c.rho.cwiseAbs().maxCoeff();

    for (double a : cusp_parameters(c))
    {
        if (std::abs(rho.value(a, 1)) < 1e-8 * dmax)
        {
            std::ostringstream os;
            os << "profile has a multiple zero near a = " << a;
            throw Error(ErrorCode::NonSimpleZero, os.str());
        }
    }
    // Tangential zeros produce no sign change; look at small local minima.
    for (int j = 0; j < n; ++j)
    {
        double const here = std::abs(c.rho[j]);
        if (here > 1e-3 * rmax || here > std::abs(c.rho[wrap(j - 1, n)])
            || here > std::abs(c.rho[wrap(j + 1, n)]))
            continue;
        if (c.sigma[wrap(j - 1, n)] != c.sigma[wrap(j + 1, n)])
            continue;
        double lo = c.u[j] - h;
        double hi = c.u[j] + h;
        double const g = (std::sqrt(5.0) - 1) / 2;
        for (int it = 0; it < 100; ++it)
        {
            double const m1 = hi - g * (hi - lo);
            double const m2 = lo + g * (hi - lo);
            if (std::abs(rho.value(m1)) < std::abs(rho.value(m2)))
                hi = m2;
            else
                lo = m1;
        }
        if (std::abs(rho.value(0.5 * (lo + hi))) < 1e-9 * rmax)
        {
            std::ostringstream os;
            os << "profile touches zero without changing sign near a = " << 0.5 * (lo + hi);
            throw Error(ErrorCode::NonSimpleZero, os.str());
        }
    }
}

SampledCurve latitude_frame(LatitudeIndicatrix const& g, int samples_per_turn)
{
    g.validate();
    if (samples_per_turn < 8)
        throw Error(ErrorCode::InvalidParameter, "need at least 8 samples per turn");
    int const n = samples_per_turn * g.q;
    SampledCurve c;
    c.period = g.period();
    c.u.resize(n);
    c.points = Mat::Zero(3, n);
    c.T.resize(3, n);
    c.N.resize(3, n);
    for (int j = 0; j < n; ++j)
    {
        double const a = c.period * j / n;
        c.u[j] = a;
        c.T.col(j) = g.tangent(a);
        c.N.col(j) = g.normal(a);
    }
    c.B = cross_columns(c.T, c.N);
    c.t = g.r * c.u;
    c.speed = Vec::Constant(n, g.r);
    c.kappa = Vec::Constant(n, g.geodesic_curvature());
    c.rho = Vec::Zero(n);
    c.rho_t = Vec::Zero(n);
    c.indicatrix = g;
    return c;
}

void fill_profile(SampledCurve& c, FourierProfile const& rho)
{
    double const r = c.indicatrix->r;
    for (int j = 0; j < c.size(); ++j)
    {
        c.rho[j] = rho.value(c.u[j]);
        c.rho_t[j] = rho.value(c.u[j], 1) / r;
    }
    c.profile = rho;
}

void check_positive_parameters(double r)
{
    if (!(r > 0 && r < 1))
        throw Error(ErrorCode::InvalidParameter, "latitude radius must lie in (0, 1)");
}
}  // namespace

//---------------------------------------------------------------------------//
void LatitudeIndicatrix::validate() const
{
    check_positive_parameters(r);
    if (q < 1)
        throw Error(ErrorCode::InvalidParameter, "winding count must be at least 1");
}

double LatitudeIndicatrix::height() const
{
    return std::sqrt(1 - r * r);
}

double LatitudeIndicatrix::geodesic_curvature() const
{
    return height() / r;
}

double LatitudeIndicatrix::period() const
{
    return 2 * M_PI * q;
}

LatitudeIndicatrix LatitudeIndicatrix::dual() const
{
    return {height(), q, phase + M_PI};
}

Eigen::Vector3d LatitudeIndicatrix::tangent(double a) const
{
    return {r * std::cos(a + phase), r * std::sin(a + phase), height()};
}

Eigen::Vector3d LatitudeIndicatrix::normal(double a) const
{
    return {-std::sin(a + phase), std::cos(a + phase), 0.0};
}

//---------------------------------------------------------------------------//
double FourierProfile::value(double a, int order) const
{
    double sum = 0;
    for (auto const& [j, cs] : terms)
    {
        double const w = frequency(j);
        double const x = w * a + order * M_PI / 2;
        sum += std::pow(w, order) * (cs.first * std::cos(x) + cs.second * std::sin(x));
    }
    return sum;
}

bool FourierProfile::is_closed() const
{
    for (int j : {0, q})
    {
        auto it = terms.find(j);
        if (it != terms.end() && (it->second.first != 0 || it->second.second != 0))
            return false;
    }
    for (auto const& [j, cs] : terms)
        if (j < 0)
            return false;
    return true;
}

bool FourierProfile::is_zero() const
{
    for (auto const& [j, cs] : terms)
        if (cs.first != 0 || cs.second != 0)
            return false;
    return true;
}

FourierProfile FourierProfile::scaled(double s) const
{
    FourierProfile out = *this;
    for (auto& [j, cs] : out.terms)
        cs = {s * cs.first, s * cs.second};
    return out;
}

FourierProfile FourierProfile::plus(FourierProfile const& other) const
{
    if (other.q != q)
        throw Error(ErrorCode::InvalidParameter, "profiles have different base frequencies");
    FourierProfile out = *this;
    for (auto const& [j, cs] : other.terms)
    {
        auto& t = out.terms[j];
        t = {t.first + cs.first, t.second + cs.second};
    }
    return out;
}

FourierProfile closure_project(FourierProfile const& raw)
{
    if (raw.q < 1)
        throw Error(ErrorCode::InvalidParameter, "winding count must be at least 1");
    FourierProfile out;
    out.q = raw.q;
    for (auto const& [j, cs] : raw.terms)
    {
        if (j < 0)
            throw Error(ErrorCode::InvalidParameter, "negative harmonic index");
        if (j == 0 || j == raw.q)
            continue;
        out.terms[j] = cs;
    }
    return out;
}

//---------------------------------------------------------------------------//
double SampledCurve::diameter() const
{
    if (points.cols() == 0)
        return 0;
    return (points.rowwise().maxCoeff() - points.rowwise().minCoeff()).norm();
}

SampledCurve build_curve(LatitudeIndicatrix const& gamma,
                         FourierProfile const& rho,
                         int samples_per_turn)
{
    if (rho.q != gamma.q)
        throw Error(ErrorCode::InvalidParameter, "profile and indicatrix winding counts differ");
    if (!rho.is_closed())
        throw Error(ErrorCode::ClosureViolation,
                    "profile has a constant or first-harmonic term");
    SampledCurve c = latitude_frame(gamma, samples_per_turn);
    fill_profile(c, rho);
    assign_signs(c);
    if (rho.is_zero())
        return c;
    check_simple_zeros(c, rho);

    for (int j = 0; j < c.size(); ++j)
        c.points.col(j) = integrate_terms(gamma, rho, c.u[j]);
    V3 const gap = integrate_terms(gamma, rho, c.period) - V3(c.points.col(0));
    if (gap.norm() > 1e-12 * std::max(c.diameter(), 1.0))
        throw Error(ErrorCode::ClosureViolation, "integrated curve does not close");
    return c;
}

SampledCurve curve_from_samples(Mat const& T, Vec const& rho, double period)
{
    if (T.rows() != 3 || T.cols() != rho.size() || T.cols() < 8)
        throw Error(ErrorCode::InvalidParameter, "need 3 x n tangents and n profile values");
    if (!(period > 0))
        throw Error(ErrorCode::InvalidParameter, "period must be positive");
    int const n = static_cast<int>(T.cols());
    for (int j = 0; j < n; ++j)
        if (std::abs(T.col(j).norm() - 1) > 1e-9)
            throw Error(ErrorCode::InvalidParameter, "tangent samples must be unit vectors");

    SampledCurve c;
    c.period = period;
    c.u = Vec::LinSpaced(n, 0, period * (n - 1) / n);
    c.T = T;
    Mat const Tu = periodic_derivative_rows(T, period, 1);
    Mat const Tuu = periodic_derivative_rows(T, period, 2);
    c.speed = Tu.colwise().norm().transpose();
    if (c.speed.minCoeff() < 1e-9 * c.speed.maxCoeff() || c.speed.maxCoeff() == 0)
        throw Error(ErrorCode::InvalidParameter, "indicatrix has a stationary point");
    c.N.resize(3, n);
    for (int j = 0; j < n; ++j)
        c.N.col(j) = Tu.col(j) / c.speed[j];
    c.B = cross_columns(c.T, c.N);
    c.kappa.resize(n);
    for (int j = 0; j < n; ++j)
        c.kappa[j] = c.B.col(j).dot(Tuu.col(j)) / (c.speed[j] * c.speed[j]);
    c.t = cumulative(c.speed, period);
    c.rho = rho;
    c.rho_t = periodic_derivative(rho, period, 1).cwiseQuotient(c.speed);

    c.points.resize(3, n);
    for (int row = 0; row < 3; ++row)
    {
        Vec const integrand = rho.cwiseProduct(T.row(row).transpose()).cwiseProduct(c.speed);
        c.points.row(row) = periodic_antiderivative(integrand, period, 1e-9).transpose();
    }
    assign_signs(c);
    return c;
}

std::vector<double> cusp_parameters(SampledCurve const& c)
{
    std::vector<double> out;
    int const n = c.size();
    double const h = c.period / n;
    for (int j : c.cusp_indices)
    {
        double lo = c.u[j];
        double hi = lo + h;
        double const f_lo = c.rho[j];
        double const f_hi = c.rho[wrap(j + 1, n)];
        double a;
        if (c.profile)
        {
            double const s_lo = f_lo > 0 ? 1 : -1;
            for (int it = 0; it < 80; ++it)
            {
                double const mid = 0.5 * (lo + hi);
                double const f = c.profile->value(mid);
                if (f == 0)
                {
                    lo = hi = mid;
                    break;
                }
                ((f > 0 ? 1 : -1) == s_lo ? lo : hi) = mid;
            }
            a = 0.5 * (lo + hi);
        }
        else
        {
            a = (f_hi == f_lo) ? lo : lo + h * f_lo / (f_lo - f_hi);
        }
        out.push_back(std::fmod(a, c.period));
    }
    return out;
}

//---------------------------------------------------------------------------//
std::vector<FrenetSample> frenet_diagnostics(SampledCurve const& c, double window)
{
    int const n = c.size();
    Mat d1, d2, d3;
    if (c.indicatrix && c.profile)
    {
        // Gamma_a = r rho gamma, differentiated term by term.
        LatitudeIndicatrix const& g = *c.indicatrix;
        V3 const axis(0, 0, g.height());
        d1.resize(3, n);
        d2.resize(3, n);
        d3.resize(3, n);
        for (int j = 0; j < n; ++j)
        {
            double const a = c.u[j];
            V3 const g0 = g.tangent(a);
            V3 const g1 = g.r * g.normal(a);
            V3 const g2 = axis - g0;
            double const f0 = c.profile->value(a);
            double const f1 = c.profile->value(a, 1);
            double const f2 = c.profile->value(a, 2);
            d1.col(j) = g.r * f0 * g0;
            d2.col(j) = g.r * (f1 * g0 + f0 * g1);
            d3.col(j) = g.r * (f2 * g0 + 2 * f1 * g1 + f0 * g2);
        }
    }
    else
    {
        d1 = periodic_derivative_rows(c.points, c.period, 1);
        d2 = periodic_derivative_rows(c.points, c.period, 2);
        d3 = periodic_derivative_rows(c.points, c.period, 3);
    }
    double const rmax = c.rho.cwiseAbs().maxCoeff();
    std::vector<FrenetSample> out(n);
    for (int j = 0; j < n; ++j)
    {
        V3 const a(d1.col(j));
        V3 const cr = a.cross(V3(d2.col(j)));
        FrenetSample& s = out[j];
        s.in_cusp_window = !(std::abs(c.rho[j]) >= window * rmax) || rmax == 0;
        double const an = a.norm();
        double const crn2 = cr.squaredNorm();
        s.curvature = crn2 > 0 ? std::sqrt(crn2) / (an * an * an) : 0;
        s.torsion = crn2 > 0 ? cr.dot(V3(d3.col(j))) / crn2 : 0;
        s.geodesic_curvature = c.rho[j] * s.torsion;
    }
    return out;
}

FrenetSample frenet_at(SampledCurve const& c, int i, double window)
{
    auto all = frenet_diagnostics(c, window);
    FrenetSample const& s = all.at(i);
    if (s.in_cusp_window)
    {
        std::ostringstream os;
        os << "sample " << i << " lies in a cusp window";
        throw Error(ErrorCode::CuspWindow, os.str());
    }
    return s;
}

//---------------------------------------------------------------------------//
FourierProfile evolute_profile(FourierProfile const& rho, LatitudeIndicatrix const& gamma)
{
    gamma.validate();
    if (rho.q != gamma.q)
        throw Error(ErrorCode::InvalidParameter, "profile and indicatrix winding counts differ");
    double const h2 = 1 - gamma.r * gamma.r;
    FourierProfile out = rho;
    for (auto& [j, cs] : out.terms)
    {
        double const w = rho.frequency(j);
        double const factor = 1 - w * w / h2;
        cs = {factor * cs.first, factor * cs.second};
    }
    return out;
}

SampledCurve evolute_curve(SampledCurve const& c)
{
    int const n = c.size();
    for (int j = 0; j < n; ++j)
    {
        if (!(std::abs(c.kappa[j]) > 1e-12))
        {
            std::ostringstream os;
            os << "indicatrix geodesic curvature vanishes at sample " << j;
            throw Error(ErrorCode::VanishingTorsion, os.str());
        }
    }
    SampledCurve e;
    e.period = c.period;
    e.u = c.u;
    e.points.resize(3, n);
    for (int j = 0; j < n; ++j)
    {
        e.points.col(j) = c.points.col(j) + c.rho[j] * c.N.col(j)
                          + (c.rho_t[j] / c.kappa[j]) * c.B.col(j);
    }
    e.T = c.B;
    e.N = -c.N;
    e.B = c.T;
    e.kappa = c.kappa.cwiseInverse();
    e.speed = c.kappa.cwiseProduct(c.speed);

    if (c.indicatrix && c.profile)
    {
        LatitudeIndicatrix const dual = c.indicatrix->dual();
        FourierProfile const rho_bar = evolute_profile(*c.profile, *c.indicatrix);
        e.indicatrix = dual;
        e.t = dual.r * e.u;
        e.rho.resize(n);
        e.rho_t.resize(n);
        for (int j = 0; j < n; ++j)
        {
            e.rho[j] = rho_bar.value(e.u[j]);
            e.rho_t[j] = rho_bar.value(e.u[j], 1) / dual.r;
        }
        e.profile = rho_bar;
    }
    else
    {
        e.t = cumulative(e.speed, e.period);
        Vec const rho_s = c.rho_t.cwiseQuotient(c.kappa);
        Vec const rho_ss = periodic_derivative(rho_s, c.period, 1).cwiseQuotient(e.speed);
        e.rho = c.rho + rho_ss;
        e.rho_t = periodic_derivative(e.rho, c.period, 1).cwiseQuotient(e.speed);
    }
    assign_signs(e);
    return e;
}

double curve_pairing(SampledCurve const& c, SampledCurve const& d, double tol)
{
    if (c.size() != d.size() || c.size() == 0 || std::abs(c.period - d.period) > 1e-12 * c.period)
        throw Error(ErrorCode::MismatchedIndicatrix, "curves are sampled on different grids");
    double const mismatch = (d.T - c.B).cwiseAbs().maxCoeff();
    if (mismatch > tol)
    {
        std::ostringstream os;
        os << "second curve's indicatrix is not dual to the first (mismatch " << mismatch << ")";
        throw Error(ErrorCode::MismatchedIndicatrix, os.str());
    }
    Vec integrand(c.size());
    for (int j = 0; j < c.size(); ++j)
        integrand[j] = c.points.col(j).dot(c.B.col(j)) * d.rho[j] * d.speed[j];
    return periodic_integral(integrand, c.period);
}

//---------------------------------------------------------------------------//
SampledCurve hypocycloid(double r, int p, int q, int samples_per_turn)
{
    check_positive_parameters(r);
    if (q < 1 || p <= q || std::gcd(p, q) != 1)
        throw Error(ErrorCode::InvalidParameter, "need k = p/q > 1 in lowest terms");
    LatitudeIndicatrix const g{r, q, 0};
    SampledCurve c = latitude_frame(g, samples_per_turn);
    FourierProfile rho;
    rho.q = q;
    rho.terms[p] = {2 / r, 0};
    fill_profile(c, rho);
    assign_signs(c);

    double const k = static_cast<double>(p) / q;
    double const h = g.height();
    for (int j = 0; j < c.size(); ++j)
    {
        double const a = c.u[j];
        c.points(0, j) = r * (std::sin((k - 1) * a) / (k - 1) + std::sin((k + 1) * a) / (k + 1));
        c.points(1, j) = r * (std::cos((k - 1) * a) / (k - 1) - std::cos((k + 1) * a) / (k + 1));
        c.points(2, j) = 2 * h * std::sin(k * a) / k;
    }
    return c;
}

double first_evolute_homothety(double r, double k)
{
    check_positive_parameters(r);
    return (r * r + k * k - 1) / (r * std::sqrt(1 - r * r));
}

double second_evolute_homothety(double r, double k)
{
    check_positive_parameters(r);
    double const rr = r * r * (1 - r * r);
    return (rr + k * k * (k * k - 1)) / rr;
}

HomothetyCheck check_second_evolute_homothety(double r, int k, int samples_per_turn)
{
    HomothetyCheck out;
    out.coefficient = second_evolute_homothety(r, k);
    SampledCurve const c = hypocycloid(r, k, 1, samples_per_turn);
    SampledCurve const e2 = evolute_curve(evolute_curve(c));
    Mat a = c.points;
    a.colwise() -= a.rowwise().mean();
    Mat b = e2.points;
    b.colwise() -= b.rowwise().mean();
    out.max_error = (b - out.coefficient * a).colwise().norm().maxCoeff()
                    / (out.coefficient * c.diameter());
    return out;
}

//---------------------------------------------------------------------------//
std::string curve_csv(SampledCurve const& c)
{
    std::ostringstream os;
    os << "t,x,y,z,rho,sigma\n";
    for (int j = 0; j < c.size(); ++j)
    {
        os << format_double(c.t[j]) << ',' << format_double(c.points(0, j)) << ','
           << format_double(c.points(1, j)) << ',' << format_double(c.points(2, j)) << ','
           << format_double(c.rho[j]) << ',' << c.sigma[j] << '\n';
    }
    return os.str();
}

std::string curve_obj(SampledCurve const& c)
{
    std::ostringstream os;
    os << "# evolab curve, " << c.size() << " samples, " << c.cusp_count() << " cusps\n";
    for (int j = 0; j < c.size(); ++j)
    {
        os << "v " << format_double(c.points(0, j)) << ' ' << format_double(c.points(1, j))
           << ' ' << format_double(c.points(2, j)) << '\n';
    }
    os << 'l';
    for (int j = 0; j < c.size(); ++j)
        os << ' ' << j + 1;
    if (c.size() > 0)
        os << " 1";
    os << '\n';
    return os.str();
}

std::string curve_svg(SampledCurve const& c)
{
    double const panel = 400;
    double const margin = 20;
    std::pair<int, int> const planes[] = {{0, 1}, {0, 2}};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * panel
       << "\" height=\"" << panel << "\" viewBox=\"0 0 " << 2 * panel << ' ' << panel
       << "\">\n";
    char buf[64];
    for (int p = 0; p < 2; ++p)
    {
        auto [a, b] = planes[p];
        double const lo_a = c.points.row(a).minCoeff(), hi_a = c.points.row(a).maxCoeff();
        double const lo_b = c.points.row(b).minCoeff(), hi_b = c.points.row(b).maxCoeff();
        double const span = std::max({hi_a - lo_a, hi_b - lo_b, 1e-300});
        double const scale = (panel - 2 * margin) / span;
        double const mid_a = 0.5 * (lo_a + hi_a), mid_b = 0.5 * (lo_b + hi_b);
        auto px = [&](int j) {
            return std::pair{panel / 2 + scale * (c.points(a, j) - mid_a),
                             panel / 2 - scale * (c.points(b, j) - mid_b)};
        };
        os << "  <g id=\"projection-" << "xyz"[a] << "xyz"[b] << "\" transform=\"translate("
           << panel * p << ",0)\">\n";
        os << "    <rect x=\"0\" y=\"0\" width=\"" << panel << "\" height=\"" << panel
           << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        os << "    <path class=\"curve\" d=\"";
        for (int j = 0; j < c.size(); ++j)
        {
            auto [x, y] = px(j);
            std::snprintf(buf, sizeof(buf), "%c%.3f %.3f ", j == 0 ? 'M' : 'L', x, y);
            os << buf;
        }
        os << "Z\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
        for (int j : c.cusp_indices)
        {
            int const next = wrap(j + 1, c.size());
            int const at = std::abs(c.rho[next]) < std::abs(c.rho[j]) ? next : j;
            auto [x, y] = px(at);
            std::snprintf(buf, sizeof(buf), "cx=\"%.3f\" cy=\"%.3f\"", x, y);
            os << "    <circle class=\"cusp\" " << buf
               << " r=\"4\" fill=\"none\" stroke=\"#d62728\"/>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace evolab
