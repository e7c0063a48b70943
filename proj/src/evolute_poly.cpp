#include "evolab/evolute_poly.hpp"

#include <random>
#include <sstream>

namespace evolab
{

Vec circumcenter(Mat const& points, double rank_tol)
{
    int const m = static_cast<int>(points.rows());
    if (points.cols() != m + 1)
        throw Error(ErrorCode::InvalidParameter, "circumcenter needs m+1 points");

    // Shift the first point to the origin, then solve
    //   z . (a_{i+1} - a_i) = (|a_{i+1}|^2 - |a_i|^2) / 2,  i = 0..m-1.
    Vec const origin = points.col(0);
    Mat a = points;
    a.colwise() -= origin;
    Mat lhs(m, m);
    Vec rhs(m);
    for (int i = 0; i < m; ++i)
    {
        lhs.row(i) = (a.col(i + 1) - a.col(i)).transpose();
        rhs(i) = 0.5 * (a.col(i + 1).squaredNorm() - a.col(i).squaredNorm());
    }
    Eigen::JacobiSVD<Mat> svd(lhs, Eigen::ComputeFullU | Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    if (!(sv(0) > 0) || sv(m - 1) < rank_tol * sv(0))
        throw Error(ErrorCode::AffinelyDegenerate, "points are affinely dependent");
    return svd.solve(rhs) + origin;
}

VertexPolygon p_evolute_vertices(VertexPolygon const& p, double rank_tol)
{
    int const m = p.dim();
    int const n = p.size();
    Mat out(m, n);
    Mat window(m, m + 1);
    for (int j = 0; j < n; ++j)
    {
        for (int k = 0; k <= m; ++k)
            window.col(k) = p.vertex(j + k);
        try
        {
            out.col(j) = circumcenter(window, rank_tol);
        }
        catch (Error const&)
        {
            std::ostringstream os;
            os << "window starting at vertex " << j << " is affinely dependent";
            throw Error(ErrorCode::AffinelyDegenerate, os.str());
        }
    }
    return VertexPolygon(std::move(out));
}

namespace
{
// Evolute side lengths (against u) of the polygons with side vectors given
// by the columns of xs.
Mat evolute_columns(SphericalPolygon const& v,
                    SphericalPolygon const& u,
                    Mat const& xs,
                    Tolerances const& tol)
{
    Mat ys(xs.rows(), xs.cols());
    for (int c = 0; c < xs.cols(); ++c)
    {
        SideVector const x(v, xs.col(c), tol);
        VertexPolygon const q = p_evolute_vertices(realize(x));
        ys.col(c) = side_lengths(u, q, tol).x();
    }
    return ys;
}
}  // namespace

EvoluteMatrix evolute_matrix(SphericalPolygon const& v,
                             Tolerances const& tol,
                             std::uint64_t retry_seed)
{
    SphericalPolygon u = dual(v, tol);
    PvBasis bv = pv_basis(v, tol);
    PvBasis bu = pv_basis(u, tol);
    int const d = bv.dim();

    Mat matrix;
    try
    {
        matrix = bu.columns.transpose() * evolute_columns(v, u, bv.columns, tol);
    }
    catch (Error const& e)
    {
        if (e.code() != ErrorCode::AffinelyDegenerate)
            throw;
        // Any invertible recombination of the basis determines the same
        // linear map; try a few random ones.
        std::mt19937_64 rng(retry_seed);
        std::normal_distribution<double> gauss;
        bool done = false;
        for (int attempt = 0; attempt < 5 && !done; ++attempt)
        {
            Mat r(d, d);
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k)
                    r(i, k) = gauss(rng);
            Eigen::FullPivLU<Mat> lu(r);
            if (!lu.isInvertible())
                continue;
            try
            {
                Mat const ys = evolute_columns(v, u, bv.columns * r, tol);
                matrix = bu.columns.transpose() * ys * lu.inverse();
                done = true;
            }
            catch (Error const& again)
            {
                if (again.code() != ErrorCode::AffinelyDegenerate)
                    throw;
            }
        }
        if (!done)
            throw;
    }
    return EvoluteMatrix{v,
                         std::move(u),
                         std::move(bv),
                         std::move(bu),
                         std::move(matrix)};
}

SideVector inscribed_kernel(SphericalPolygon const& v, Tolerances const& tol)
{
    int const m = v.dim();
    int const n = v.size();
    Mat composed = Mat::Identity(m, m);
    for (int j = 0; j < n; ++j)
    {
        Vec const d = v.dir(j);
        composed = (Mat::Identity(m, m) - 2.0 * d * d.transpose()) * composed;
    }
    Eigen::JacobiSVD<Mat> svd(composed - Mat::Identity(m, m), Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    int nullity = 0;
    for (int i = 0; i < sv.size(); ++i)
        nullity += sv(i) <= tol.eigen_one ? 1 : 0;
    if (nullity == 0)
        throw Error(ErrorCode::NoFixedVector,
                    "reflection composition has no eigenvalue 1");
    if (nullity > 1)
        throw Error(ErrorCode::AmbiguousKernel,
                    "eigenvalue 1 has multiplicity > 1");

    Vec point = svd.matrixV().col(m - 1).normalized();
    Vec x(n);
    for (int j = 0; j < n; ++j)
    {
        Vec const d = v.dir(j);
        x(j) = -2.0 * d.dot(point);
        point += x(j) * d;
    }
    x.normalize();
    for (int j = 0; j < n; ++j)
    {
        if (std::abs(x(j)) > 1e-12)
        {
            if (x(j) < 0)
                x = -x;
            break;
        }
    }
    return SideVector(v, std::move(x), tol);
}

VertexPolygon involute(VertexPolygon const& q, Tolerances const& tol)
{
    int const m = q.dim();
    int const n = q.size();
    std::vector<Isometry> reflections;
    reflections.reserve(n);
    Mat window(m, m);
    for (int j = 0; j < n; ++j)
    {
        // Vertices j-m+1..j of q are equidistant from vertices j, j+1 of the
        // involute, so reflecting in their hyperplane maps one to the other.
        for (int k = 0; k < m; ++k)
            window.col(k) = q.vertex(j - m + 1 + k);
        reflections.push_back(hyperplane_reflection(window));
    }
    Isometry sigma = reflections.front();
    for (int j = 1; j < n; ++j)
        sigma = reflections[j].compose_after(sigma);

    Mat verts(m, n);
    verts.col(0) = isometry_fixed_point(sigma, tol);
    for (int j = 0; j + 1 < n; ++j)
        verts.col(j + 1) = reflections[j].apply(verts.col(j));
    return VertexPolygon(std::move(verts));
}

VertexPolygon involute(SphericalPolygon const& v_target,
                       VertexPolygon const& q,
                       Tolerances const& tol)
{
    VertexPolygon p = involute(q, tol);
    side_lengths(v_target, p, tol);
    return p;
}

}  // namespace evolab
