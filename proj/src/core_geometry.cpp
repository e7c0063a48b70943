#include "evolab/core_geometry.hpp"

#include <cmath>
#include <sstream>

namespace evolab
{

std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::NonGeneric: return "NonGeneric";
        case ErrorCode::DegenerateNormal: return "DegenerateNormal";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ClosureViolation: return "ClosureViolation";
        case ErrorCode::NotAligned: return "NotAligned";
        case ErrorCode::NoFixedPoint: return "NoFixedPoint";
        case ErrorCode::NonUnique: return "NonUnique";
        case ErrorCode::NoInvariantLine: return "NoInvariantLine";
        case ErrorCode::AffinelyDegenerate: return "AffinelyDegenerate";
        case ErrorCode::NoFixedVector: return "NoFixedVector";
        case ErrorCode::AmbiguousKernel: return "AmbiguousKernel";
        case ErrorCode::WindowDegenerate: return "WindowDegenerate";
        case ErrorCode::WindowMismatch: return "WindowMismatch";
        case ErrorCode::DegeneratePairing: return "DegeneratePairing";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::PairingFailure: return "PairingFailure";
        case ErrorCode::PointPolygon: return "PointPolygon";
        case ErrorCode::Divergence: return "Divergence";
        case ErrorCode::NonSimpleZero: return "NonSimpleZero";
        case ErrorCode::CuspWindow: return "CuspWindow";
        case ErrorCode::VanishingTorsion: return "VanishingTorsion";
        case ErrorCode::MismatchedIndicatrix: return "MismatchedIndicatrix";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

namespace
{
int sign_of(double x)
{
    return x > 0 ? 1 : -1;
}

// Generalized cross product of m-1 columns in R^m, oriented so that
// det(cols, result) = |result|^2.
Vec generalized_cross(Mat const& cols)
{
    int const m = static_cast<int>(cols.rows());
    Vec out(m);
    for (int i = 0; i < m; ++i)
    {
        Mat minor(m - 1, m - 1);
        for (int r = 0, rr = 0; r < m; ++r)
        {
            if (r == i)
                continue;
            minor.row(rr++) = cols.row(r);
        }
        double const cof = (m - 1 > 0) ? minor.determinant() : 1.0;
        out(i) = ((m + i + 1) % 2 == 0 ? 1.0 : -1.0) * cof;
    }
    return out;
}
}  // namespace

//---------------------------------------------------------------------------//
SphericalPolygon::SphericalPolygon(Mat dirs, Tolerances const& tol)
    : dirs_(std::move(dirs))
{
    int const m = dim();
    int const n = size();
    if (m < 2)
        throw Error(ErrorCode::InvalidParameter, "ambient dimension must be >= 2");
    if (n < m + 2)
    {
        std::ostringstream os;
        os << "need n >= m+2 directions, got n=" << n << " m=" << m;
        throw Error(ErrorCode::InvalidParameter, os.str());
    }
    for (int i = 0; i < n; ++i)
    {
        if (!dirs_.col(i).allFinite()
            || std::abs(dirs_.col(i).norm() - 1.0) > tol.unit_norm)
        {
            std::ostringstream os;
            os << "direction " << i << " is not a unit vector";
            throw Error(ErrorCode::InvalidParameter, os.str());
        }
    }
    for (int i = 0; i < n; ++i)
    {
        if (std::abs(window_det(i)) <= tol.genericity)
        {
            std::ostringstream os;
            os << "directions " << i << ".." << i + m - 1
               << " (cyclic) are linearly dependent";
            throw Error(ErrorCode::NonGeneric, os.str());
        }
    }
}

double SphericalPolygon::window_det(int start) const
{
    int const m = dim();
    Mat w(m, m);
    for (int k = 0; k < m; ++k)
        w.col(k) = dir(start + k);
    return w.determinant();
}

//---------------------------------------------------------------------------//
VertexPolygon::VertexPolygon(Mat verts) : verts_(std::move(verts))
{
    if (!verts_.allFinite())
        throw Error(ErrorCode::InvalidParameter, "non-finite vertex coordinates");
}

VertexPolygon VertexPolygon::translated(Vec const& c) const
{
    Mat v = verts_;
    v.colwise() += c;
    return VertexPolygon(std::move(v));
}

VertexPolygon VertexPolygon::shifted(int shift) const
{
    Mat v(verts_.rows(), verts_.cols());
    for (int i = 0; i < size(); ++i)
        v.col(i) = vertex(i + shift);
    return VertexPolygon(std::move(v));
}

Vec VertexPolygon::centroid() const
{
    return verts_.rowwise().mean();
}

//---------------------------------------------------------------------------//
SideVector::SideVector(SphericalPolygon base, Vec x, Tolerances const& tol)
    : base_(std::move(base)), x_(std::move(x))
{
    if (x_.size() != base_.size())
        throw Error(ErrorCode::InvalidParameter, "side vector length mismatch");
    double const scale = x_.size() ? x_.cwiseAbs().maxCoeff() : 0.0;
    if (closure_residual() > tol.closure * scale)
    {
        std::ostringstream os;
        os << "polygon does not close: |sum x_i v_i| = " << closure_residual()
           << " (|x|_inf = " << scale << ")";
        throw Error(ErrorCode::ClosureViolation, os.str());
    }
}

double SideVector::closure_residual() const
{
    return (base_.dirs() * x_).norm();
}

//---------------------------------------------------------------------------//
Isometry::Isometry(Mat q, Vec t_, Tolerances const& tol)
    : Q(std::move(q)), t(std::move(t_))
{
    int const m = static_cast<int>(Q.rows());
    if (Q.cols() != m || t.size() != m)
        throw Error(ErrorCode::InvalidParameter, "isometry shape mismatch");
    double const err
        = (Q.transpose() * Q - Mat::Identity(m, m)).cwiseAbs().maxCoeff();
    if (err > tol.orthogonality)
        throw Error(ErrorCode::InvalidParameter, "linear part is not orthogonal");
}

Isometry Isometry::compose_after(Isometry const& first) const
{
    // this(first(x)) = Q (Q1 x + t1) + t
    return Isometry(Q * first.Q, Q * first.t + t);
}

double Isometry::orientation() const
{
    return Q.determinant() > 0 ? 1.0 : -1.0;
}

//---------------------------------------------------------------------------//
Signature signature(SphericalPolygon const& v, Tolerances const& tol)
{
    Signature s;
    int const n = v.size();
    s.dets.resize(n);
    s.signs.resize(n);
    for (int a = 0; a < n; ++a)
    {
        double const d = v.window_det(a);
        if (std::abs(d) <= tol.genericity)
            throw Error(ErrorCode::NonGeneric, "vanishing window determinant");
        s.dets[a] = d;
        s.signs[a] = sign_of(d);
    }
    return s;
}

SphericalPolygon dual(SphericalPolygon const& v, Tolerances const& tol)
{
    int const m = v.dim();
    int const n = v.size();
    Signature const s = signature(v, tol);
    Mat u(m, n);
    for (int j = 0; j < n; ++j)
    {
        Mat span(m, m - 1);
        for (int k = 1; k < m; ++k)
            span.col(k - 1) = v.dir(j + k);
        Vec normal = generalized_cross(span);
        double const vol = normal.norm();
        if (vol <= tol.genericity)
            throw Error(ErrorCode::DegenerateNormal,
                        "orthogonal complement is not one-dimensional");
        normal /= vol;

        // Both positivity conditions follow from the orientation above; a
        // disagreement means the input sits on the edge of genericity.
        int const ahead = sign_of(normal.dot(v.dir(j + m)));
        int const behind = sign_of(normal.dot(v.dir(j)));
        int const parity = (m - 1) % 2 == 0 ? 1 : -1;
        if (ahead != s.signs[wrap(j + 1, n)] || behind != parity * s.signs[j])
            throw Error(ErrorCode::NonGeneric, "inconsistent dual orientation");
        u.col(j) = normal;
    }
    return SphericalPolygon(std::move(u), tol);
}

std::vector<int> double_dual_signs(Signature const& s, int m)
{
    int const n = static_cast<int>(s.signs.size());
    std::vector<int> eps(n);
    for (int j = 0; j < n; ++j)
    {
        int e = (m - 1) % 2 == 0 ? 1 : -1;
        for (int a = j + 2; a <= j + m - 1; ++a)
            e *= s.signs[wrap(a, n)];
        eps[j] = e;
    }
    return eps;
}

std::vector<int> dual_signature_signs(Signature const& s, int m)
{
    int const n = static_cast<int>(s.signs.size());
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j)
    {
        int e = 1;
        for (int a = j + 1; a <= j + m - 1; ++a)
            e *= s.signs[wrap(a, n)];
        out[j] = e;
    }
    return out;
}

PvBasis pv_basis(SphericalPolygon const& v, Tolerances const& tol)
{
    int const m = v.dim();
    int const n = v.size();
    Eigen::JacobiSVD<Mat> svd(v.dirs(), Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        rank += sv(i) > tol.genericity * sv(0) ? 1 : 0;
    if (rank != m)
        throw Error(ErrorCode::RankDeficient, "closure relations are dependent");

    Mat cols = svd.matrixV().rightCols(n - m);
    for (int c = 0; c < cols.cols(); ++c)
    {
        for (int r = 0; r < n; ++r)
        {
            if (std::abs(cols(r, c)) > 1e-12)
            {
                if (cols(r, c) < 0)
                    cols.col(c) *= -1.0;
                break;
            }
        }
    }
    return PvBasis{v, std::move(cols)};
}

VertexPolygon realize(SideVector const& x, Vec const& base)
{
    auto const& v = x.base();
    int const n = v.size();
    Mat verts(v.dim(), n);
    verts.col(0) = base;
    for (int j = 0; j + 1 < n; ++j)
        verts.col(j + 1) = verts.col(j) + x.x()(j) * v.dir(j);
    return VertexPolygon(std::move(verts));
}

VertexPolygon realize(SideVector const& x)
{
    return realize(x, Vec::Zero(x.base().dim()));
}

SideVector side_lengths(SphericalPolygon const& v,
                        VertexPolygon const& p,
                        Tolerances const& tol)
{
    int const n = v.size();
    if (p.size() != n || p.dim() != v.dim())
        throw Error(ErrorCode::InvalidParameter, "polygon shape mismatch");
    Vec x(n);
    double scale = 0;
    for (int j = 0; j < n; ++j)
        scale = std::max(scale, (p.vertex(j + 1) - p.vertex(j)).norm());
    for (int j = 0; j < n; ++j)
    {
        Vec const edge = p.vertex(j + 1) - p.vertex(j);
        x(j) = edge.dot(v.dir(j));
        double const off = (edge - x(j) * v.dir(j)).norm();
        if (off > tol.alignment * scale)
        {
            std::ostringstream os;
            os << "edge " << j << " has off-axis component " << off;
            throw Error(ErrorCode::NotAligned, os.str());
        }
    }
    Tolerances loose = tol;
    loose.closure = std::max(tol.closure, n * tol.alignment);
    return SideVector(v, std::move(x), loose);
}

//---------------------------------------------------------------------------//
namespace
{
// Solves A y = b for a square A whose singular values are compared against
// tol. Returns the solution or throws according to consistency.
Vec solve_affine_fixed(Mat const& a, Vec const& b, double tol)
{
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) > tol)
        return svd.solve(b);

    svd.setThreshold(tol / std::max(sv(0), tol));
    Vec const y = svd.solve(b);
    double const residual = (a * y - b).norm();
    if (residual > 1e-9 * std::max(1.0, b.norm()))
        throw Error(ErrorCode::NoFixedPoint, "affine system is inconsistent");
    throw Error(ErrorCode::NonUnique, "solution set has positive dimension");
}

Mat orthonormal_complement(Vec const& d)
{
    int const m = static_cast<int>(d.size());
    Eigen::JacobiSVD<Mat> svd(Mat(d), Eigen::ComputeFullU);
    return svd.matrixU().rightCols(m - 1);
}
}  // namespace

Vec isometry_fixed_point(Isometry const& sigma, Tolerances const& tol)
{
    int const m = static_cast<int>(sigma.Q.rows());
    Mat const a = Mat::Identity(m, m) - sigma.Q;
    return solve_affine_fixed(a, sigma.t, tol.eigen_one);
}

Line isometry_invariant_line(Isometry const& sigma, Tolerances const& tol)
{
    int const m = static_cast<int>(sigma.Q.rows());
    Mat const id = Mat::Identity(m, m);
    bool saw_nonunique = false;
    for (double lambda : {1.0, -1.0})
    {
        Eigen::JacobiSVD<Mat> svd(sigma.Q - lambda * id, Eigen::ComputeFullV);
        auto const& sv = svd.singularValues();
        int nullity = 0;
        for (int i = 0; i < sv.size(); ++i)
            nullity += sv(i) <= tol.eigen_one ? 1 : 0;
        if (nullity == 0)
            continue;
        if (nullity > 1)
        {
            saw_nonunique = true;
            continue;
        }
        Vec const d = svd.matrixV().col(m - 1).normalized();
        Mat const b = orthonormal_complement(d);
        Mat const a = b.transpose() * (id - sigma.Q) * b;
        try
        {
            Vec const y = solve_affine_fixed(a, b.transpose() * sigma.t, tol.eigen_one);
            return Line{b * y, d};
        }
        catch (Error const& e)
        {
            if (e.code() == ErrorCode::NonUnique)
                saw_nonunique = true;
        }
    }
    if (saw_nonunique)
        throw Error(ErrorCode::NonUnique, "invariant lines are not isolated");
    throw Error(ErrorCode::NoInvariantLine, "no real eigenvalue +-1 admits an invariant line");
}

Isometry hyperplane_reflection(Mat const& points, double rank_tol)
{
    int const m = static_cast<int>(points.rows());
    Vec const c = points.rowwise().mean();
    Mat centered = points;
    centered.colwise() -= c;
    Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeFullU);
    auto const& sv = svd.singularValues();
    double const top = sv(0);
    if (!(top > 0) || sv(m - 2) < rank_tol * top)
        throw Error(ErrorCode::WindowDegenerate,
                    "window points do not span a hyperplane");
    Vec const normal = svd.matrixU().col(m - 1);
    Mat const q = Mat::Identity(m, m) - 2.0 * normal * normal.transpose();
    return Isometry(q, 2.0 * c.dot(normal) * normal);
}

}  // namespace evolab
