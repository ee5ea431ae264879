#include "tfu/hermite.hpp"

#include <cmath>

#include "tfu/closed_form.hpp"
#include "tfu/errors.hpp"
#include "tfu/parallel.hpp"

namespace tfu {
namespace {

const double kH0 = std::pow(2.0, 0.25);

void check_order(int max_order) {
  if (max_order < 0 || max_order > kMaxHermiteOrder)
    throw_precondition("hermite: order must lie in [0, " + std::to_string(kMaxHermiteOrder) + "]");
}

// tables[m][k] = h_m(x_k) along one axis of the grid.
std::vector<std::vector<double>> axis_tables(const Grid& g, int max_order) {
  const int n = g.points_per_axis();
  std::vector<std::vector<double>> t(static_cast<std::size_t>(max_order + 1), std::vector<double>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k) {
    const auto h = hermite_values(max_order, g.coordinate(k));
    for (int m = 0; m <= max_order; ++m) t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(m)];
  }
  return t;
}

ClosedForm hermite_form(const Polynomial& poly) {
  const int d = poly.dim();
  ClosedForm form = gaussian_closed_form(Eigen::MatrixXd::Identity(d, d));
  GaussianTerm t = form.terms().front();
  t.poly = poly;
  return ClosedForm(std::move(t));
}

}  // namespace

HermiteIndex::HermiteIndex(int d, MultiIndex idx) : dim(d), k(idx) {
  require(d == 1 || d == 2, "hermite: dimension must be 1 or 2");
  if (d == 1) k[1] = 0;
  require(k[0] >= 0 && k[1] >= 0, "hermite: negative index");
  check_order(order());
}

std::vector<double> hermite_values(int max_order, double x) {
  check_order(max_order);
  std::vector<double> h(static_cast<std::size_t>(max_order + 1));
  const double s = std::sqrt(2.0 * kPi) * x;
  h[0] = kH0 * std::exp(-kPi * x * x);
  if (max_order >= 1) h[1] = std::sqrt(2.0) * s * h[0];
  for (int m = 1; m < max_order; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    h[mm + 1] = std::sqrt(2.0 / (m + 1)) * s * h[mm] - std::sqrt(static_cast<double>(m) / (m + 1)) * h[mm - 1];
  }
  return h;
}

Polynomial hermite_polynomial(int m, int dim, int axis) {
  check_order(m);
  const Polynomial s = Polynomial::variable(dim, axis) * cplx(std::sqrt(2.0 * kPi));
  Polynomial prev = Polynomial::constant(dim, 0.0);
  Polynomial cur = Polynomial::constant(dim, kH0);
  for (int j = 0; j < m; ++j) {
    Polynomial next = s * cur * cplx(std::sqrt(2.0 / (j + 1)));
    if (j > 0) next += prev * cplx(-std::sqrt(static_cast<double>(j) / (j + 1)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.trim();
  return cur;
}

Signal hermite_function(const HermiteIndex& k, const Grid& grid) {
  HermiteCoefficients c;
  c[k] = 1.0;
  return hermite_synthesize(c, grid);
}

HermiteCoefficients hermite_coefficients(const Signal& s, int max_order) {
  check_order(max_order);
  const Grid& g = s.grid();
  const int d = g.dim();
  const auto n = static_cast<std::size_t>(g.points_per_axis());
  const auto tables = axis_tables(g, max_order);
  const double cell = g.cell_volume();
  HermiteCoefficients out;
  if (d == 1) {
    std::vector<cplx> terms(n);
    for (int m = 0; m <= max_order; ++m) {
      const auto& h = tables[static_cast<std::size_t>(m)];
      for (std::size_t i = 0; i < n; ++i) terms[i] = s[i] * h[i];
      out[HermiteIndex::of(m)] = cell * pairwise_sum(terms);
    }
    return out;
  }
  // Contract the second axis first: r[m1][i0] = sum_i1 s(i0, i1) h_m1(x_i1).
  std::vector<std::vector<cplx>> partial(static_cast<std::size_t>(max_order + 1), std::vector<cplx>(n));
  std::vector<cplx> terms(n);
  for (int m1 = 0; m1 <= max_order; ++m1) {
    const auto& h = tables[static_cast<std::size_t>(m1)];
    for (std::size_t i0 = 0; i0 < n; ++i0) {
      for (std::size_t i1 = 0; i1 < n; ++i1) terms[i1] = s[i0 * n + i1] * h[i1];
      partial[static_cast<std::size_t>(m1)][i0] = pairwise_sum(terms);
    }
  }
  for (int m0 = 0; m0 <= max_order; ++m0) {
    const auto& h = tables[static_cast<std::size_t>(m0)];
    for (int m1 = 0; m0 + m1 <= max_order; ++m1) {
      const auto& p = partial[static_cast<std::size_t>(m1)];
      for (std::size_t i0 = 0; i0 < n; ++i0) terms[i0] = p[i0] * h[i0];
      out[HermiteIndex::of(m0, m1)] = cell * pairwise_sum(terms);
    }
  }
  return out;
}

Signal hermite_synthesize(const HermiteCoefficients& coeffs, const Grid& grid) {
  const int d = grid.dim();
  int max_order = 0;
  for (const auto& [k, c] : coeffs) {
    require(k.dim == d, "hermite: index dimension does not match the grid");
    max_order = std::max(max_order, std::max(k.k[0], k.k[1]));
  }
  const auto n = static_cast<std::size_t>(grid.points_per_axis());
  const auto tables = axis_tables(grid, max_order);
  std::vector<cplx> samples(grid.size());
  Polynomial poly = Polynomial::constant(d, 0.0);
  for (const auto& [k, c] : coeffs) {
    if (c == cplx{}) continue;
    const auto& h0 = tables[static_cast<std::size_t>(k.k[0])];
    if (d == 1) {
      for (std::size_t i = 0; i < n; ++i) samples[i] += c * h0[i];
      poly += hermite_polynomial(k.k[0], 1, 0) * c;
    } else {
      const auto& h1 = tables[static_cast<std::size_t>(k.k[1])];
      for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1) samples[i0 * n + i1] += c * (h0[i0] * h1[i1]);
      poly += hermite_polynomial(k.k[0], 2, 0) * hermite_polynomial(k.k[1], 2, 1) * c;
    }
  }
  poly.trim();
  Signal out(grid, std::move(samples));
  if (poly.is_zero()) return out.with_closed_form(ClosedForm(d));
  return out.with_closed_form(hermite_form(poly));
}

}  // namespace tfu
