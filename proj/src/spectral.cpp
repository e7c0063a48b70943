#include "evolab/spectral.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <fftw3.h>

#include "evolab/errors.hpp"

namespace evolab
{
namespace
{
using cplx = std::complex<double>;

std::vector<cplx> forward(Vec const& f)
{
    int const n = static_cast<int>(f.size());
    std::vector<double> in(f.data(), f.data() + n);
    std::vector<cplx> out(n / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(
        n, in.data(), reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

Vec backward(std::vector<cplx> coeffs, int n)
{
    std::vector<double> out(n);
    fftw_plan plan = fftw_plan_dft_c2r_1d(
        n, reinterpret_cast<fftw_complex*>(coeffs.data()), out.data(), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    Vec result(n);
    for (int i = 0; i < n; ++i)
        result[i] = out[i] / n;
    return result;
}

void check_size(Vec const& f)
{
    if (f.size() < 4)
        throw Error(ErrorCode::InvalidParameter, "periodic data needs at least 4 samples");
}
}  // namespace

Vec periodic_derivative(Vec const& f, double period, int order, double filter)
{
    check_size(f);
    if (order < 0)
        throw Error(ErrorCode::InvalidParameter, "negative derivative order");
    int const n = static_cast<int>(f.size());
    auto c = forward(f);
    double cmax = 0;
    for (auto const& z : c)
        cmax = std::max(cmax, std::abs(z));
    cplx const unit(0, 2 * M_PI / period);
    for (std::size_t k = 0; k < c.size(); ++k)
    {
        bool const nyquist = n % 2 == 0 && static_cast<int>(k) == n / 2;
        if (std::abs(c[k]) <= filter * cmax || (nyquist && order > 0))
        {
            c[k] = 0;
            continue;
        }
        c[k] *= std::pow(unit * static_cast<double>(k), order);
    }
    return backward(std::move(c), n);
}

Mat periodic_derivative_rows(Mat const& f, double period, int order, double filter)
{
    Mat out(f.rows(), f.cols());
    for (Eigen::Index r = 0; r < f.rows(); ++r)
        out.row(r) = periodic_derivative(f.row(r).transpose(), period, order, filter).transpose();
    return out;
}

Vec periodic_antiderivative(Vec const& f, double period, double mean_tol)
{
    check_size(f);
    int const n = static_cast<int>(f.size());
    double const scale = f.cwiseAbs().maxCoeff();
    if (std::abs(f.mean()) > mean_tol * std::max(scale, 1e-300) && scale > 0)
        throw Error(ErrorCode::ClosureViolation, "integrand has nonzero mean");
    auto c = forward(f);
    c[0] = 0;
    cplx const unit(0, 2 * M_PI / period);
    for (std::size_t k = 1; k < c.size(); ++k)
    {
        if (n % 2 == 0 && static_cast<int>(k) == n / 2)
            c[k] = 0;
        else
            c[k] /= unit * static_cast<double>(k);
    }
    Vec out = backward(std::move(c), n);
    return out.array() - out[0];
}

double periodic_integral(Vec const& f, double period)
{
    return f.sum() * period / static_cast<double>(f.size());
}

}  // namespace evolab
