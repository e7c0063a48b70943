#pragma once

#include <cstdint>
#include <optional>

#include "evolab/core_geometry.hpp"

namespace evolab
{

//---------------------------------------------------------------------------//
/*!
 * Matrix of the evolute map P_v -> P_u (u = dual(v)) in the orthonormal
 * bases returned by pv_basis.
 */
struct EvoluteMatrix
{
    SphericalPolygon source;
    SphericalPolygon target;
    PvBasis source_basis;
    PvBasis target_basis;
    Mat matrix;

    //! Side lengths (against target) of the evolute of x.
    Vec apply(Vec const& x) const
    {
        return target_basis.side_lengths(matrix * source_basis.coords(x));
    }
};

//! Center of the sphere through m+1 points (columns) in R^m.
Vec circumcenter(Mat const& points, double rank_tol = 1e-10);

/*!
 * Vertex j of the result is the circumcenter of vertices j, ..., j+m of p.
 * With this labeling the side from vertex j to vertex j+1 of the result is
 * parallel to dual(v)_j.
 */
VertexPolygon p_evolute_vertices(VertexPolygon const& p, double rank_tol = 1e-10);

EvoluteMatrix evolute_matrix(SphericalPolygon const& v,
                             Tolerances const& tol = {},
                             std::uint64_t retry_seed = 0x5eed);

//! Unit-norm side vector spanning ker(E) for n - m odd.
SideVector inscribed_kernel(SphericalPolygon const& v, Tolerances const& tol = {});

/*!
 * P-involute of q: the polygon whose evolute is q. Exists (uniquely) for
 * n - m even; throws NoFixedPoint otherwise.
 */
VertexPolygon involute(VertexPolygon const& q, Tolerances const& tol = {});

//! Involute of q, checked to be side-aligned with v_target.
VertexPolygon involute(SphericalPolygon const& v_target,
                       VertexPolygon const& q,
                       Tolerances const& tol = {});

}  // namespace evolab
