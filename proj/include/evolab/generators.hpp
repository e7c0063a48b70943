#pragma once

#include <cstdint>
#include <random>

#include "evolab/core_geometry.hpp"
#include "evolab/curves.hpp"

namespace evolab
{

using Rng = std::mt19937_64;

//! n directions uniform on S^{m-1}; non-generic draws are redrawn.
SphericalPolygon random_spherical_polygon(int m, int n, Rng& rng, Tolerances const& tol = {});
SphericalPolygon random_spherical_polygon(int m, int n, std::uint64_t seed, Tolerances const& tol = {});

//! Gaussian combination of an orthonormal basis of P_v.
SideVector random_side_vector(SphericalPolygon const& v, Rng& rng, Tolerances const& tol = {});

//! realize(random_side_vector) translated by a Gaussian offset.
VertexPolygon random_polygon(SphericalPolygon const& v, Rng& rng, Tolerances const& tol = {});

//! Planar directions at angles 2 pi j / n; unit sides give the regular n-gon.
SphericalPolygon regular_directions(int n);

/*!
 * Closed profile on a q-fold circle with Gaussian coefficients for
 * harmonics j = 2q .. max_harmonic (frequency j/q).
 */
FourierProfile random_profile(int q, int max_harmonic, Rng& rng);

}  // namespace evolab
