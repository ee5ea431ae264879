#pragma once

#include <array>
#include <span>

#include "tfu/signal.hpp"

namespace tfu {

/// sqrt(cell * sum |s|^2), pairwise summation.
double l2_norm(const Signal& s);

/// cell * sum s1 conj(s2): linear in the first argument, conjugate-linear in
/// the second.
cplx inner_product(const Signal& s1, const Signal& s2);

/// cell * sum prod_j (x_j - c_j)^{k_j} |s(x)|^2 for total order sum k_j <= 4.
double moment(const Signal& s, std::span<const int> powers, std::span<const double> center);

/// First moments of |s|^2 divided by its mass (zero vector for a zero signal).
std::array<double, 2> mean_position(const Signal& s);

}  // namespace tfu
