#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "tfu/grid.hpp"
#include "tfu/hermite.hpp"
#include "tfu/signal.hpp"

namespace tfu::test {

inline double max_abs_diff(const Signal& a, const Signal& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Hermite functions from the explicit physicists' polynomials, independent of
// the library recurrence.
inline double explicit_hermite(int m, double x) {
  const double z = std::sqrt(2.0 * kPi) * x;
  double h = 0.0;
  switch (m) {
    case 0: h = 1.0; break;
    case 1: h = 2.0 * z; break;
    case 2: h = 4.0 * z * z - 2.0; break;
    case 3: h = 8.0 * z * z * z - 12.0 * z; break;
    case 4: h = 16.0 * std::pow(z, 4) - 48.0 * z * z + 12.0; break;
    default: return NAN;
  }
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  return std::pow(2.0, 0.25) / std::sqrt(std::pow(2.0, m) * fact) * h * std::exp(-kPi * x * x);
}

inline Signal superposition(std::mt19937_64& rng, const Grid& g, int max_order) {
  std::uniform_int_distribution<int> order(0, max_order);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int m = order(rng);
  HermiteCoefficients c;
  for (int k = 0; k <= m; ++k) c[HermiteIndex::of(k)] = cplx(unit(rng), unit(rng));
  c[HermiteIndex::of(m)] += cplx(0.5, 0.0);
  return hermite_synthesize(c, g);
}

}  // namespace tfu::test
