#include "tfu/quadrature.hpp"

#include <cmath>
#include <vector>

#include "tfu/errors.hpp"
#include "tfu/parallel.hpp"

namespace tfu {

double l2_norm(const Signal& s) {
  std::vector<double> sq(s.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(s[i]);
  return std::sqrt(s.grid().cell_volume() * pairwise_sum(sq));
}

cplx inner_product(const Signal& s1, const Signal& s2) {
  if (!(s1.grid() == s2.grid())) throw_precondition("inner_product: grid mismatch");
  std::vector<cplx> prod(s1.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = s1[i] * std::conj(s2[i]);
  return s1.grid().cell_volume() * pairwise_sum(prod);
}

double moment(const Signal& s, std::span<const int> powers, std::span<const double> center) {
  const Grid& g = s.grid();
  const auto d = static_cast<std::size_t>(g.dim());
  require(powers.size() == d && center.size() == d, "moment: multi-index or center has wrong length");
  int order = 0;
  for (int k : powers) {
    require(k >= 0, "moment: negative power");
    order += k;
  }
  require(order <= 4, "moment: total order must be at most 4");
  std::vector<double> terms(s.size());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    g.point(i, p);
    double w = std::norm(s[i]);
    for (std::size_t j = 0; j < d; ++j) w *= std::pow(p[j] - center[j], powers[j]);
    terms[i] = w;
  }
  return g.cell_volume() * pairwise_sum(terms);
}

std::array<double, 2> mean_position(const Signal& s) {
  const int d = s.dim();
  const std::array<double, 2> zero{0.0, 0.0};
  const std::span<const double> c(zero.data(), static_cast<std::size_t>(d));
  const std::array<int, 2> none{0, 0};
  const double mass = moment(s, std::span<const int>(none.data(), static_cast<std::size_t>(d)), c);
  std::array<double, 2> mean{0.0, 0.0};
  if (mass == 0.0) return mean;
  for (int j = 0; j < d; ++j) {
    std::array<int, 2> k{0, 0};
    k[static_cast<std::size_t>(j)] = 1;
    mean[static_cast<std::size_t>(j)] = moment(s, std::span<const int>(k.data(), static_cast<std::size_t>(d)), c) / mass;
  }
  return mean;
}

}  // namespace tfu
