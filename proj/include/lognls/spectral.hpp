#pragma once

#include <span>
#include <vector>

#include "lognls/fft.hpp"
#include "lognls/grid.hpp"

namespace lognls {

/// d^order f / dx^order by multiplication with (i k)^order in Fourier space.
/// The Nyquist bin is dropped for odd orders so that real input gives real output.
std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid1D& grid, int order,
                                      FftPlan& plan);
std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid1D& grid, int order);

/// Real-valued convenience overloads (imaginary part of the result is discarded).
std::vector<double> spectral_derivative(std::span<const double> values, const Grid1D& grid,
                                        int order, FftPlan& plan);
std::vector<double> spectral_derivative(std::span<const double> values, const Grid1D& grid,
                                        int order);

/// Gaussian low-pass: multiplies the spectrum by exp(-(k s)^2 / 2).
std::vector<double> spectral_smooth(std::span<const double> values, const Grid1D& grid,
                                    double scale);

}  // namespace lognls
