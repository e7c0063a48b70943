#include "evolab/generators.hpp"

#include <cmath>

#include "evolab/errors.hpp"

namespace evolab
{

SphericalPolygon random_spherical_polygon(int m, int n, Rng& rng, Tolerances const& tol)
{
    if (m < 2 || n < m + 2)
        throw Error(ErrorCode::InvalidParameter, "need m >= 2 and n >= m + 2");
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 100; ++attempt)
    {
        Mat dirs(m, n);
        for (int j = 0; j < n; ++j)
        {
            for (int i = 0; i < m; ++i)
                dirs(i, j) = normal(rng);
            dirs.col(j).normalize();
        }
        try
        {
            return SphericalPolygon(dirs, tol);
        }
        catch (Error const& e)
        {
            if (e.code() != ErrorCode::NonGeneric)
                throw;
        }
    }
    throw Error(ErrorCode::NonGeneric, "no generic configuration in 100 draws");
}

SphericalPolygon random_spherical_polygon(int m, int n, std::uint64_t seed, Tolerances const& tol)
{
    Rng rng(seed);
    return random_spherical_polygon(m, n, rng, tol);
}

SideVector random_side_vector(SphericalPolygon const& v, Rng& rng, Tolerances const& tol)
{
    PvBasis const basis = pv_basis(v, tol);
    std::normal_distribution<double> normal;
    Vec c(basis.dim());
    for (int i = 0; i < c.size(); ++i)
        c[i] = normal(rng);
    return SideVector(v, basis.side_lengths(c), tol);
}

VertexPolygon random_polygon(SphericalPolygon const& v, Rng& rng, Tolerances const& tol)
{
    SideVector const x = random_side_vector(v, rng, tol);
    std::normal_distribution<double> normal;
    Vec base(v.dim());
    for (int i = 0; i < base.size(); ++i)
        base[i] = normal(rng);
    return realize(x, base);
}

SphericalPolygon regular_directions(int n)
{
    Mat dirs(2, n);
    for (int j = 0; j < n; ++j)
    {
        double const a = 2 * M_PI * j / n;
        dirs(0, j) = std::cos(a);
        dirs(1, j) = std::sin(a);
    }
    return SphericalPolygon(dirs);
}

FourierProfile random_profile(int q, int max_harmonic, Rng& rng)
{
    if (q < 1 || max_harmonic < 2 * q)
        throw Error(ErrorCode::InvalidParameter, "need q >= 1 and max_harmonic >= 2q");
    std::normal_distribution<double> normal;
    FourierProfile out;
    out.q = q;
    for (int j = 2 * q; j <= max_harmonic; ++j)
    {
        double const c = normal(rng);
        double const s = normal(rng);
        out.terms[j] = {c, s};
    }
    return out;
}

}  // namespace evolab
