#include "evolab/pairing_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace evolab
{

DoubleDual double_dual(SphericalPolygon const& v, Tolerances const& tol)
{
    SphericalPolygon w = dual(dual(v, tol), tol);
    int const m = v.dim();
    int const n = v.size();
    std::vector<int> eps(n);
    for (int j = 0; j < n; ++j)
    {
        double const c = w.dir(j).dot(v.dir(j + m));
        if (std::abs(std::abs(c) - 1.0) > 1e-8)
            throw Error(ErrorCode::NonGeneric, "double dual is not parallel to v");
        eps[j] = c > 0 ? 1 : -1;
    }
    return DoubleDual{std::move(w), std::move(eps), m};
}

Mat double_dual_identification(DoubleDual const& dd,
                               PvBasis const& bv,
                               PvBasis const& bw)
{
    int const n = bv.base.size();
    // z in P_w  ->  x_{j+m} = eps_j z_j in P_v
    Mat perm = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        perm(wrap(j + dd.shift, n), j) = dd.eps[j];
    return bv.columns.transpose() * perm * bw.columns;
}

//---------------------------------------------------------------------------//
namespace
{
Vec support_numbers_with(VertexPolygon const& p,
                         SphericalPolygon const& u,
                         Tolerances const& tol)
{
    int const m = p.dim();
    int const n = p.size();
    double scale = 1.0;
    for (int i = 0; i < n; ++i)
        scale = std::max(scale, p.vertex(i).norm());

    Vec lambda(n);
    for (int j = 0; j < n; ++j)
    {
        double const first = p.vertex(j + 1).dot(u.dir(j));
        for (int k = 2; k <= m; ++k)
        {
            double const other = p.vertex(j + k).dot(u.dir(j));
            if (std::abs(other - first) > tol.closure * scale * 10)
            {
                std::ostringstream os;
                os << "support window " << j << " disagrees by "
                   << std::abs(other - first);
                throw Error(ErrorCode::WindowMismatch, os.str());
            }
        }
        lambda(j) = first;
    }
    return lambda;
}

double pairing_with(SphericalPolygon const& u,
                    VertexPolygon const& p,
                    VertexPolygon const& q,
                    Tolerances const& tol)
{
    Vec const lambda = support_numbers_with(p, u, tol);
    Vec const y = side_lengths(u, q, tol).x();
    return y.dot(lambda);
}
}  // namespace

Vec support_numbers(VertexPolygon const& p,
                    SphericalPolygon const& v,
                    Tolerances const& tol)
{
    side_lengths(v, p, tol);
    return support_numbers_with(p, dual(v, tol), tol);
}

double pairing(SphericalPolygon const& v,
               VertexPolygon const& p,
               VertexPolygon const& q,
               Tolerances const& tol)
{
    side_lengths(v, p, tol);
    return pairing_with(dual(v, tol), p, q, tol);
}

PairingMatrix pairing_matrix(SphericalPolygon const& v, Tolerances const& tol)
{
    SphericalPolygon const u = dual(v, tol);
    PvBasis const bv = pv_basis(v, tol);
    PvBasis const bu = pv_basis(u, tol);
    int const d = bv.dim();

    std::vector<VertexPolygon> ps, qs;
    for (int a = 0; a < d; ++a)
    {
        ps.push_back(realize(SideVector(v, bv.columns.col(a), tol)));
        qs.push_back(realize(SideVector(u, bu.columns.col(a), tol)));
    }
    Mat g(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            g(a, b) = pairing_with(u, ps[a], qs[b], tol);

    Eigen::JacobiSVD<Mat> svd(g);
    auto const& sv = svd.singularValues();
    PairingMatrix out{v, g, sv(d - 1), sv(0)};
    if (out.sigma_min < 1e-8 * out.sigma_max)
        throw Error(ErrorCode::DegeneratePairing, "pairing matrix is singular");
    return out;
}

//---------------------------------------------------------------------------//
SecondEvolute second_evolute(SphericalPolygon const& v, Tolerances const& tol)
{
    EvoluteMatrix first = evolute_matrix(v, tol);
    EvoluteMatrix second = evolute_matrix(first.target, tol);
    DoubleDual const dd = double_dual(v, tol);
    Mat ident = double_dual_identification(dd, first.source_basis, second.target_basis);
    Mat m2 = ident * second.matrix * first.matrix;
    return SecondEvolute{std::move(first), std::move(second), std::move(ident), std::move(m2)};
}

Mat second_evolute_matrix(SphericalPolygon const& v, Tolerances const& tol)
{
    return second_evolute(v, tol).matrix;
}

//---------------------------------------------------------------------------//
namespace
{
// Orthonormal basis of the column space of a (numerical rank by tol).
Mat column_space(Mat const& a, double tol)
{
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU);
    auto const& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        rank += sv(i) > tol * sv(0) ? 1 : 0;
    return svd.matrixU().leftCols(rank);
}
}  // namespace

SymplecticForm symplectic_form(SphericalPolygon const& v, Tolerances const& tol)
{
    SecondEvolute const se = second_evolute(v, tol);
    SphericalPolygon const& u = se.first.target;
    PvBasis const& bv = se.first.source_basis;
    int const d = bv.dim();
    int const m = v.dim();
    int const n = v.size();

    // omega(e_a, e_b) = <E e_a, e_b>, the second argument read in P_{v**}.
    std::vector<VertexPolygon> basis_polys, image_polys;
    for (int a = 0; a < d; ++a)
    {
        SideVector const x(v, bv.columns.col(a), tol);
        basis_polys.push_back(as_double_dual(realize(x)));
        image_polys.push_back(p_evolute_vertices(realize(x)));
    }
    SphericalPolygon const w_dual = dual(u, tol);
    Mat omega(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            omega(a, b) = pairing_with(w_dual, image_polys[a], basis_polys[b], tol);

    Mat restriction = Mat::Identity(d, d);
    if ((n - m) % 2 != 0)
        restriction = column_space(se.identification * se.second.matrix, 1e-8);

    SymplecticForm out;
    out.omega = restriction.transpose() * omega * restriction;
    out.second_evolute = restriction.transpose() * se.matrix * restriction;
    out.restriction = std::move(restriction);

    Eigen::JacobiSVD<Mat> svd(out.omega);
    auto const& sv = svd.singularValues();
    out.sigma_max = sv(0);
    out.sigma_min = sv(sv.size() - 1);
    double const asym = (out.omega + out.omega.transpose()).cwiseAbs().maxCoeff();
    if (out.sigma_min < 1e-8 * out.sigma_max || asym > 1e-8 * out.sigma_max)
        throw Error(ErrorCode::DegenerateForm, "evolute form is not symplectic");
    return out;
}

double skew_hamiltonian_residual(Mat const& omega, Mat const& l)
{
    // omega(Lx, y) = x^T L^T Omega y, omega(x, Ly) = x^T Omega L y
    return (l.transpose() * omega - omega * l).cwiseAbs().maxCoeff();
}

double relative_skew_hamiltonian_residual(Mat const& omega, Mat const& l)
{
    auto norm2 = [](Mat const& a) {
        return Eigen::JacobiSVD<Mat>(a).singularValues()(0);
    };
    double const scale = norm2(omega) * norm2(l);
    double const abs = skew_hamiltonian_residual(omega, l);
    return scale > 0 ? abs / scale : abs;
}

double skew_hamiltonian_residual(SphericalPolygon const& v, Tolerances const& tol)
{
    SymplecticForm const f = symplectic_form(v, tol);
    return relative_skew_hamiltonian_residual(f.omega, f.second_evolute);
}

//---------------------------------------------------------------------------//
char const* to_string(DominantClass c)
{
    switch (c)
    {
        case DominantClass::RealPositive: return "real-positive";
        case DominantClass::RealNegative: return "real-negative";
        case DominantClass::Complex: return "complex";
        case DominantClass::Zero: return "zero";
    }
    return "unknown";
}

SpectrumReport spectrum(Mat const& m2, SpectrumOptions const& opts)
{
    using cplx = std::complex<double>;
    SpectrumReport report;
    if (m2.rows() == 0)
        return report;

    Eigen::EigenSolver<Mat> solver(m2, false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::PairingFailure, "eigenvalue iteration did not converge");
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
        report.eigenvalues.push_back(solver.eigenvalues()(i));
    std::stable_sort(report.eigenvalues.begin(),
                     report.eigenvalues.end(),
                     [](cplx a, cplx b) {
                         if (std::abs(a) != std::abs(b))
                             return std::abs(a) > std::abs(b);
                         if (a.real() != b.real())
                             return a.real() > b.real();
                         return a.imag() > b.imag();
                     });

    double const top = std::abs(report.eigenvalues.front());
    std::vector<cplx> nonzero;
    for (cplx z : report.eigenvalues)
    {
        if (std::abs(z) < opts.zero_tol * top || top == 0)
        {
            report.residual_unpaired.push_back(z);
            ++report.zero_count;
        }
        else
        {
            nonzero.push_back(z);
        }
    }

    std::vector<bool> used(nonzero.size(), false);
    int dominant_partner = -1;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
    {
        if (used[i])
            continue;
        used[i] = true;
        int best = -1;
        for (std::size_t k = 0; k < nonzero.size(); ++k)
        {
            if (used[k])
                continue;
            if (best < 0
                || std::abs(nonzero[k] - nonzero[i]) < std::abs(nonzero[best] - nonzero[i]))
                best = static_cast<int>(k);
        }
        if (best < 0)
        {
            report.paired = false;
            report.residual_unpaired.push_back(nonzero[i]);
            report.max_gap = std::numeric_limits<double>::infinity();
            continue;
        }
        used[best] = true;
        double const gap = std::abs(nonzero[best] - nonzero[i])
                           / std::max(std::abs(nonzero[i]), std::abs(nonzero[best]));
        if (i == 0)
            dominant_partner = best;
        report.pairs.push_back(EigenPair{nonzero[i], nonzero[best], gap});
        report.max_gap = std::max(report.max_gap, gap);
        if (gap > opts.pair_tol)
            report.paired = false;
    }

    if (!nonzero.empty())
    {
        cplx const dom = nonzero.front();
        report.dominant = dom;
        if (std::abs(dom.imag()) <= opts.real_tol * std::abs(dom))
            report.dominant_class = dom.real() > 0 ? DominantClass::RealPositive
                                                   : DominantClass::RealNegative;
        else
            report.dominant_class = DominantClass::Complex;
        for (std::size_t k = 1; k < nonzero.size(); ++k)
        {
            if (static_cast<int>(k) == dominant_partner)
                continue;
            report.subdominant_modulus
                = std::max(report.subdominant_modulus, std::abs(nonzero[k]));
        }
    }

    if (opts.strict && !report.paired)
    {
        std::ostringstream os;
        os << "eigenvalues do not pair: max relative gap " << report.max_gap;
        throw Error(ErrorCode::PairingFailure, os.str());
    }
    return report;
}

}  // namespace evolab
