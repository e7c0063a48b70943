#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evolab/core_geometry.hpp"

namespace evolab
{

//---------------------------------------------------------------------------//
/*!
 * Circle of latitude at height sqrt(1 - r^2), traversed q times:
 *   gamma(a) = (r cos(a + phase), r sin(a + phase), sqrt(1 - r^2)),
 * a in [0, 2 pi q). Arc length is t = r a.
 */
struct LatitudeIndicatrix
{
    double r = 0.5;
    int q = 1;
    double phase = 0;

    void validate() const;
    double height() const;
    //! Geodesic curvature, positive with this orientation.
    double geodesic_curvature() const;
    double period() const;  //!< 2 pi q, in the angle a
    //! Circle of binormals: radius sqrt(1 - r^2), height r, phase + pi.
    LatitudeIndicatrix dual() const;
    Eigen::Vector3d tangent(double a) const;
    Eigen::Vector3d normal(double a) const;
};

//---------------------------------------------------------------------------//
/*!
 * rho(a) = sum_j c_j cos(j a / q) + s_j sin(j a / q).
 *
 * A profile is closed (gives a closed curve on a q-fold latitude circle)
 * when the j = 0 and j = q terms vanish.
 */
struct FourierProfile
{
    int q = 1;
    std::map<int, std::pair<double, double>> terms;  //!< j -> (c_j, s_j)

    double frequency(int j) const { return static_cast<double>(j) / q; }
    //! d^order rho / da^order
    double value(double a, int order = 0) const;
    bool is_closed() const;
    bool is_zero() const;
    FourierProfile scaled(double s) const;
    FourierProfile plus(FourierProfile const& other) const;
};

FourierProfile closure_project(FourierProfile const& raw);

//---------------------------------------------------------------------------//
/*!
 * Curve sampled uniformly in a parameter u over one period, together with
 * its indicatrix data: Gamma_t = rho T with t the arc length of T.
 *
 * sigma_j is the sign of rho_j (zero samples take the sign of the next
 * sample). cusp_indices lists j with sigma_j != sigma_{j+1}; the zero of
 * rho lies in [u_j, u_{j+1}].
 */
struct SampledCurve
{
    double period = 0;
    Vec u;
    Vec t;       //!< arc length of the indicatrix, t(0) = 0
    Vec speed;   //!< dt/du
    Mat points;  //!< 3 x n
    Mat T;
    Mat N;
    Mat B;
    Vec rho;
    Vec rho_t;
    Vec kappa;   //!< geodesic curvature of T
    std::vector<int> sigma;
    std::vector<int> cusp_indices;
    std::optional<LatitudeIndicatrix> indicatrix;
    std::optional<FourierProfile> profile;

    int size() const { return static_cast<int>(points.cols()); }
    int cusp_count() const { return static_cast<int>(cusp_indices.size()); }
    double diameter() const;
};

/*!
 * Curve with tangent indicatrix gamma and profile rho, integrated term by
 * term. samples_per_turn samples are taken on each traversal of the circle.
 */
SampledCurve build_curve(LatitudeIndicatrix const& gamma,
                         FourierProfile const& rho,
                         int samples_per_turn = 2048);

/*!
 * Curve from a sampled indicatrix. T holds unit vectors at uniform u over
 * [0, period); rho is the profile against the arc length of T. Derivatives
 * and the integral are spectral.
 */
SampledCurve curve_from_samples(Mat const& T, Vec const& rho, double period);

//! Parameters u of the zeros of rho, refined by bisection.
std::vector<double> cusp_parameters(SampledCurve const& c);

//---------------------------------------------------------------------------//
struct FrenetSample
{
    double curvature = 0;
    double torsion = 0;
    double geodesic_curvature = 0;  //!< rho * torsion
    bool in_cusp_window = false;
};

/*!
 * Curvature and torsion from spectral derivatives of the sampled points.
 * Samples with |rho| < window * max|rho| are flagged as in a cusp window.
 */
std::vector<FrenetSample> frenet_diagnostics(SampledCurve const& c, double window = 1e-3);

//! Single sample; throws CuspWindow inside a cusp window.
FrenetSample frenet_at(SampledCurve const& c, int i, double window = 1e-3);

//---------------------------------------------------------------------------//
//! Gamma + rho N + (rho_t / kappa) B, with indicatrix B.
SampledCurve evolute_curve(SampledCurve const& c);

//! Harmonic j is multiplied by 1 - (j/q)^2 / (1 - r^2).
FourierProfile evolute_profile(FourierProfile const& rho, LatitudeIndicatrix const& gamma);

/*!
 * Pairing of c (indicatrix gamma) with d (indicatrix dual to gamma):
 * trapezoidal sum of (Gamma . B) * rho_d against the arc length of d's
 * indicatrix. Both curves must share the sample grid and d.T must equal
 * c.B; otherwise MismatchedIndicatrix.
 */
double curve_pairing(SampledCurve const& c, SampledCurve const& d, double tol = 1e-8);

//---------------------------------------------------------------------------//
/*!
 * x = r (sin((k-1)a)/(k-1) + sin((k+1)a)/(k+1)),
 * y = r (cos((k-1)a)/(k-1) - cos((k+1)a)/(k+1)),
 * z = 2 sqrt(1-r^2) sin(k a)/k,  k = p/q, a in [0, 2 pi q).
 * The frame and profile are those of build_curve with rho = (2/r) cos(k a).
 */
SampledCurve hypocycloid(double r, int p, int q = 1, int samples_per_turn = 2048);

//! (r^2 + k^2 - 1) / (r sqrt(1 - r^2))
double first_evolute_homothety(double r, double k);
//! (r^2 (1-r^2) + k^2 (k^2-1)) / (r^2 (1-r^2))
double second_evolute_homothety(double r, double k);

struct HomothetyCheck
{
    double coefficient = 0;
    double max_error = 0;  //!< relative to the curve diameter
};

//! Compares the double evolute of hypocycloid(r, k) with coefficient * curve.
HomothetyCheck check_second_evolute_homothety(double r, int k, int samples_per_turn = 2048);

//---------------------------------------------------------------------------//
//! Columns t, x, y, z, rho, sigma.
std::string curve_csv(SampledCurve const& c);
std::string curve_obj(SampledCurve const& c);
//! (x,y) and (x,z) projections; cusps marked with circles.
std::string curve_svg(SampledCurve const& c);

}  // namespace evolab
