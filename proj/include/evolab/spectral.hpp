#pragma once

#include "evolab/core_geometry.hpp"

namespace evolab
{

/*!
 * Derivatives of periodic data sampled uniformly over one period.
 *
 * Fourier coefficients below filter * (largest coefficient) are dropped
 * before differentiating so rounding noise is not amplified. The Nyquist
 * mode is discarded for even sample counts.
 */
Vec periodic_derivative(Vec const& f, double period, int order = 1, double filter = 1e-13);

//! Row-wise periodic_derivative.
Mat periodic_derivative_rows(Mat const& f, double period, int order = 1, double filter = 1e-13);

/*!
 * Antiderivative F of f with F(0) = 0. The mean of f must vanish within
 * mean_tol * max|f|, otherwise ClosureViolation.
 */
Vec periodic_antiderivative(Vec const& f, double period, double mean_tol = 1e-10);

//! Trapezoidal sum h * sum f_j over one period.
double periodic_integral(Vec const& f, double period);

}  // namespace evolab
