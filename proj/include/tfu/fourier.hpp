#pragma once

#include <span>

#include "tfu/signal.hpp"

namespace tfu {

/// Riemann-sum approximation of the continuous transform along one axis of a
/// row-major array. Samples along `axis` sit at (k - n/2) * spacing; the
/// output along that axis sits at (j - n/2) / (n * spacing):
///   out_j = spacing * sum_k in_k exp(sign * 2 i pi x_k y_j).
/// Implemented as index rotation by n/2, an FFT, and rotation back.
void continuous_dft_axis(std::span<cplx> data, std::span<const int> shape, int axis, double spacing,
                         int sign);

/// The same transform applied to every axis of an n^dim array.
void continuous_dft(std::span<cplx> data, int dim, int n, double spacing, int sign);

/// f^(y) = integral f(t) exp(-2 i pi <t, y>) dt sampled on grid.dual().
Signal fourier(const Signal& s);
/// Inverse of fourier(): kernel exp(+2 i pi <t, y>), result on the dual of the
/// dual lattice.
Signal inverse_fourier(const Signal& s);

}  // namespace tfu
