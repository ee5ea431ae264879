#pragma once

#include <map>
#include <vector>

#include "tfu/polynomial.hpp"
#include "tfu/signal.hpp"

namespace tfu {

inline constexpr int kMaxHermiteOrder = 32;

/// Multi-index of a tensor-product Hermite function. Unused axes are 0.
struct HermiteIndex {
  int dim = 1;
  MultiIndex k{0, 0};

  HermiteIndex() = default;
  /// Requires nonnegative entries and order <= kMaxHermiteOrder.
  HermiteIndex(int dim, MultiIndex k);
  static HermiteIndex of(int k0) { return HermiteIndex(1, {k0, 0}); }
  static HermiteIndex of(int k0, int k1) { return HermiteIndex(2, {k0, k1}); }

  int order() const { return k[0] + (dim == 2 ? k[1] : 0); }
  friend bool operator<(const HermiteIndex& a, const HermiteIndex& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.k < b.k;
  }
  friend bool operator==(const HermiteIndex& a, const HermiteIndex& b) {
    return a.dim == b.dim && a.k == b.k;
  }
};

using HermiteCoefficients = std::map<HermiteIndex, cplx>;

/// Values h_0(x)..h_max_order(x) of the 1-d functions
///   h_m(x) = 2^{1/4} (2^m m!)^{-1/2} H_m(sqrt(2 pi) x) exp(-pi x^2)
/// computed by the normalized three-term recurrence.
std::vector<double> hermite_values(int max_order, double x);

/// The polynomial Q_m with h_m(x) = Q_m(x) exp(-pi x^2), as a polynomial in
/// coordinate `axis` of a `dim`-variate ring.
Polynomial hermite_polynomial(int m, int dim, int axis);

/// Tensor-product Hermite function sampled on the grid, closed form attached.
Signal hermite_function(const HermiteIndex& k, const Grid& grid);

/// c_k = <s, h_k> for every multi-index of order <= max_order.
HermiteCoefficients hermite_coefficients(const Signal& s, int max_order);

/// sum_k c_k h_k on the grid, closed form attached.
Signal hermite_synthesize(const HermiteCoefficients& coeffs, const Grid& grid);

}  // namespace tfu
