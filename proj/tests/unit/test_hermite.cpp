#include "doctest.h"

#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/hermite.hpp"
#include "tfu/quadrature.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

TEST_CASE("values at the origin") {
  const Grid g = default_grid(1);
  CHECK(hermite_function(HermiteIndex::of(0), g)[128].real() == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(hermite_function(HermiteIndex::of(1), g)[128] == cplx(0.0));
}

TEST_CASE("recurrence matches explicit polynomials") {
  for (double x : {-2.1, -0.3, 0.0, 0.8, 1.7}) {
    const auto v = hermite_values(4, x);
    for (int m = 0; m <= 4; ++m) CHECK(v[static_cast<std::size_t>(m)] == doctest::Approx(test::explicit_hermite(m, x)));
  }
}

TEST_CASE("orthonormality and eigenfunctions up to order 12") {
  const Grid g = default_grid(1);
  std::vector<Signal> h;
  for (int m = 0; m <= 12; ++m) h.push_back(hermite_function(HermiteIndex::of(m), g));
  double gram = 0.0;
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j)
      gram = std::max(gram, std::abs(inner_product(h[i], h[j]) - (i == j ? 1.0 : 0.0)));
  CHECK(gram < 1e-8);

  const cplx minus_i(0, -1);
  for (int m = 0; m <= 12; ++m) CHECK(test::max_abs_diff(fourier(h[m]), h[m].scaled(std::pow(minus_i, m))) < 1e-8);

  for (int m : {14, 16}) CHECK(std::abs(l2_norm(hermite_function(HermiteIndex::of(m), g)) - 1.0) < 1e-9);
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS(HermiteIndex::of(kMaxHermiteOrder + 1), PreconditionError);
  CHECK_THROWS_AS(HermiteIndex::of(-1), PreconditionError);
  CHECK_THROWS_AS(hermite_function(HermiteIndex::of(1, 1), default_grid(1)), PreconditionError);
}

TEST_CASE("analysis and synthesis") {
  const Grid g = default_grid(1);
  const Signal h3 = hermite_function(HermiteIndex::of(3), g);
  const auto c = hermite_coefficients(h3, 8);
  CHECK(c.size() == 9);
  for (const auto& [k, v] : c) CHECK(std::abs(v - (k.order() == 3 ? 1.0 : 0.0)) < 1e-8);

  const Signal mix = (hermite_function(HermiteIndex::of(0), g) + hermite_function(HermiteIndex::of(1), g))
                         .scaled(1.0 / std::sqrt(2.0));
  const auto cm = hermite_coefficients(mix, 3);
  CHECK(std::abs(cm.at(HermiteIndex::of(0)) - std::sqrt(0.5)) < 1e-9);
  CHECK(std::abs(cm.at(HermiteIndex::of(1)) - std::sqrt(0.5)) < 1e-9);

  for (const auto& [k, v] : hermite_coefficients(Signal::zeros(g), 4)) CHECK(v == cplx(0.0));

  const Signal h5 = hermite_function(HermiteIndex::of(5), g);
  CHECK(test::max_abs_diff(hermite_synthesize(hermite_coefficients(h5, 10), g), h5) < 1e-8);
  CHECK(hermite_synthesize({}, g).is_zero());
  CHECK(test::max_abs_diff(hermite_synthesize({{HermiteIndex::of(0), 1.0}}, g), hermite_function(HermiteIndex::of(0), g)) ==
        0.0);
}

TEST_CASE("synthesis degree link") {
  const Grid g = default_grid(1);
  HermiteCoefficients c{{HermiteIndex::of(0), 0.4}, {HermiteIndex::of(2), cplx(0, 1)}, {HermiteIndex::of(4), -0.7}};
  const Signal s = hermite_synthesize(c, g);
  // Divide by e^{-pi x^2} on |x| <= 3 and fit a degree-4 polynomial.
  std::vector<double> xs;
  std::vector<cplx> ys;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i)[0];
    if (std::abs(x) > 3.0) continue;
    xs.push_back(x);
    ys.push_back(s[i] * std::exp(kPi * x * x));
  }
  Eigen::MatrixXd v(static_cast<Eigen::Index>(xs.size()), 5);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t r = 0; r < xs.size(); ++r) {
    for (int p = 0; p <= 4; ++p) v(static_cast<Eigen::Index>(r), p) = std::pow(xs[r], p);
    rhs(static_cast<Eigen::Index>(r)) = ys[r];
  }
  const Eigen::MatrixXcd vc = v.cast<cplx>();
  const Eigen::VectorXcd coef = vc.colPivHouseholderQr().solve(rhs);
  CHECK((vc * coef - rhs).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("two-dimensional tensor products") {
  const Grid g = make_grid(2, 4.0, 64);
  const Signal h = hermite_function(HermiteIndex::of(2, 1), g);
  const std::size_t flat = 20 * 64 + 37;
  const auto p = g.point(flat);
  CHECK(h[flat].real() == doctest::Approx(test::explicit_hermite(2, p[0]) * test::explicit_hermite(1, p[1])));
  CHECK(std::abs(l2_norm(h) - 1.0) < 1e-9);
  const auto c = hermite_coefficients(h, 3);
  CHECK(std::abs(c.at(HermiteIndex::of(2, 1)) - 1.0) < 1e-9);
  CHECK(std::abs(c.at(HermiteIndex::of(1, 2))) < 1e-9);
}
