#pragma once

#include <array>
#include <span>

#include "tfu/signal.hpp"

namespace tfu {

/// Shift, modulation and dilation parameters for the covariance identities.
/// Shifts must keep the bilinear kernels on the lattice (see verify_lem0).
struct OperatorParams {
  std::array<double, 2> shift_u{0.0, 0.0};
  std::array<double, 2> shift_v{0.0, 0.0};
  std::array<double, 2> modulation_u{0.0, 0.0};
  std::array<double, 2> modulation_v{0.0, 0.0};
  double dilation = 1.0;
};

/// S(a)u(t) = u(t - a). Each a_j must be an integer multiple of the spacing;
/// the samples are cyclically permuted, so the norm is preserved exactly.
Signal translate(const Signal& s, std::span<const double> shift);

/// Translation by an arbitrary real shift through the phase ramp
/// exp(-2 i pi <a, y>) on the Fourier side (exact for band-concentrated signals).
Signal translate_spectral(const Signal& s, std::span<const double> shift);

/// M(w)u(t) = exp(2 i pi <w, t>) u(t).
Signal modulate(const Signal& s, std::span<const double> omega);

/// Zu(t) = u(-t): index k maps to n - k mod n along every axis.
Signal reflect(const Signal& s);

struct DilateResult {
  Signal signal;
  /// True when the samples came from linear interpolation rather than an
  /// exact generator.
  bool lossy;
};

/// D_lambda u(t) = lambda^{d/2} u(lambda t). Signals with a closed form are
/// re-evaluated exactly; others are interpolated linearly, zero outside the box.
DilateResult dilate(const Signal& s, double lambda);

/// g = exp(-pi |x|^2) * f, computed as g^ = f^ exp(-pi |y|^2).
Signal gaussian_mollify(const Signal& s);

}  // namespace tfu
