#pragma once

#include <complex>
#include <vector>

#include "evolab/evolute_poly.hpp"

namespace evolab
{

//---------------------------------------------------------------------------//
// Double dual bookkeeping. With dense labels dual(dual(v))_j = eps_j v_{j+m},
// so a polygon of P_v is read as a polygon of P_{v**} by relabeling vertex
// j+m as vertex j.
//---------------------------------------------------------------------------//
struct DoubleDual
{
    SphericalPolygon w;     //!< dual(dual(v))
    std::vector<int> eps;   //!< w_j = eps_j v_{j+m}
    int shift;              //!< m
};

DoubleDual double_dual(SphericalPolygon const& v, Tolerances const& tol = {});

//! Matrix taking P_{v**} coordinates in basis bw to P_v coordinates in bv.
Mat double_dual_identification(DoubleDual const& dd,
                               PvBasis const& bv,
                               PvBasis const& bw);

//! Polygon of P_v relabeled as a polygon of P_{v**}.
inline VertexPolygon as_double_dual(VertexPolygon const& p)
{
    return p.shifted(p.dim());
}
//! Polygon of P_{v**} relabeled as a polygon of P_v.
inline VertexPolygon from_double_dual(VertexPolygon const& p)
{
    return p.shifted(-p.dim());
}

//---------------------------------------------------------------------------//
/*!
 * Support numbers of p in P_v: lambda_j is the signed distance from the
 * origin to the hyperplane through vertices j+1..j+m, oriented by dual(v)_j.
 * Every vertex of the window must give the same value.
 */
Vec support_numbers(VertexPolygon const& p,
                    SphericalPolygon const& v,
                    Tolerances const& tol = {});

//! <P, Q> = sum_j y_j lambda_j for p in P_v and q in P_{v*}.
double pairing(SphericalPolygon const& v,
               VertexPolygon const& p,
               VertexPolygon const& q,
               Tolerances const& tol = {});

struct PairingMatrix
{
    SphericalPolygon v;
    Mat G;  //!< G(a, b) = <basis_v[a], basis_{v*}[b]>
    double sigma_min = 0;
    double sigma_max = 0;
};

PairingMatrix pairing_matrix(SphericalPolygon const& v, Tolerances const& tol = {});

struct SecondEvolute
{
    EvoluteMatrix first;   //!< P_v -> P_u
    EvoluteMatrix second;  //!< P_u -> P_{v**}
    Mat identification;    //!< P_{v**} coords -> P_v coords
    Mat matrix;            //!< E^2 on P_v coords
};

SecondEvolute second_evolute(SphericalPolygon const& v, Tolerances const& tol = {});
Mat second_evolute_matrix(SphericalPolygon const& v, Tolerances const& tol = {});

//---------------------------------------------------------------------------//
/*!
 * omega(x, y) = <E x, y> on P_v, or on the image of the second evolute map
 * (the image of E: P_u -> P_v) when n - m is odd. All matrices are in an
 * orthonormal basis of that space, given by the columns of `restriction`
 * in P_v coordinates.
 */
struct SymplecticForm
{
    Mat omega;
    Mat restriction;
    Mat second_evolute;  //!< E^2 restricted to the same space
    double sigma_min = 0;
    double sigma_max = 0;
};

SymplecticForm symplectic_form(SphericalPolygon const& v, Tolerances const& tol = {});

//! max_{a,b} |omega(L e_a, e_b) - omega(e_a, L e_b)|
double skew_hamiltonian_residual(Mat const& omega, Mat const& l);
//! skew_hamiltonian_residual / (|Omega|_2 |L|_2)
double relative_skew_hamiltonian_residual(Mat const& omega, Mat const& l);
//! Relative residual of the symplectic form of v.
double skew_hamiltonian_residual(SphericalPolygon const& v, Tolerances const& tol = {});

//---------------------------------------------------------------------------//
enum class DominantClass
{
    RealPositive,
    RealNegative,
    Complex,
    Zero,
};

char const* to_string(DominantClass c);

struct EigenPair
{
    std::complex<double> first;
    std::complex<double> second;
    double gap = 0;  //!< |first - second| / max(|first|, |second|)
};

struct SpectrumOptions
{
    double pair_tol = 1e-6;
    double zero_tol = 1e-8;  //!< relative to max |lambda|
    double real_tol = 1e-9;  //!< |Im| / |lambda| below which a value is real
    bool strict = true;      //!< throw PairingFailure on an unpaired value
};

struct SpectrumReport
{
    std::vector<std::complex<double>> eigenvalues;  //!< sorted by modulus, descending
    std::vector<EigenPair> pairs;
    std::vector<std::complex<double>> residual_unpaired;  //!< zeros, plus failures
    int zero_count = 0;
    bool paired = true;
    double max_gap = 0;
    std::complex<double> dominant;
    DominantClass dominant_class = DominantClass::Zero;
    //! Largest modulus outside the dominant pair (0 if none).
    double subdominant_modulus = 0;
};

SpectrumReport spectrum(Mat const& m2, SpectrumOptions const& opts = {});

}  // namespace evolab
