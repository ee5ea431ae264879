#include "doctest.h"

#include <cmath>

#include "tfu/fourier.hpp"
#include "tfu/hermite.hpp"
#include "tfu/operators.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/spec.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

TEST_CASE("gaussian is self-dual") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  const Signal f = fourier(h0);
  CHECK(f.grid() == g.dual());
  // Compare against the formula, not against the library's own h0.
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double y = f.grid().point(i)[0];
    err = std::max(err, std::abs(f[i] - std::pow(2.0, 0.25) * std::exp(-kPi * y * y)));
  }
  CHECK(err < 1e-8);
}

TEST_CASE("hermite eigenfunctions") {
  const Grid g = default_grid(1);
  const Signal h1 = hermite_function(HermiteIndex::of(1), g);
  CHECK(test::max_abs_diff(fourier(h1), h1.scaled(cplx(0, -1))) < 1e-8);
  const Signal h3 = hermite_function(HermiteIndex::of(3), g);
  CHECK(test::max_abs_diff(fourier(h3), h3.scaled(cplx(0, 1))) < 1e-8);
}

TEST_CASE("zero maps to zero") {
  const Grid g = default_grid(1);
  CHECK(fourier(Signal::zeros(g)).is_zero());
}

TEST_CASE("fourier of an off-center chirped gaussian against quadrature") {
  const Grid g = make_grid(1, 8.0, 256);
  Eigen::MatrixXd a(1, 1), b(1, 1);
  a << 1.7;
  b << 0.4;
  Eigen::VectorXd c(1), w(1);
  c << 0.6;
  w << 0.3;
  const Signal s = sample_spec(GaussHermiteSpec(Polynomial::variable(1, 0), a, b, c, w), g);
  const Signal f = fourier(s);
  for (std::size_t j : {100u, 128u, 150u}) {
    const double y = f.grid().point(j)[0];
    cplx direct{};
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double t = g.point(k)[0];
      direct += s[k] * std::polar(1.0, -2 * kPi * t * y) * g.spacing();
    }
    CHECK(std::abs(f[j] - direct) < 1e-12);
  }
}

TEST_CASE("parseval and double transform") {
  const Grid g = default_grid(1);
  for (double a : {0.25, 1.0, 4.0}) {
    Polynomial p(1, 2);
    p.set_coefficient({0, 0}, 1.0);
    p.set_coefficient({2, 0}, cplx(0.5, 0.5));
    const Signal s = sample_spec(GaussHermiteSpec::centered(p, Eigen::MatrixXd::Constant(1, 1, a)), g);
    CHECK(std::abs(l2_norm(fourier(s)) - l2_norm(s)) < 1e-9 * l2_norm(s));
    CHECK(test::max_abs_diff(fourier(fourier(s)), reflect(s)) < 1e-8);
    CHECK(test::max_abs_diff(inverse_fourier(fourier(s)), s) < 1e-12);
  }
}

TEST_CASE("two-dimensional transform separates") {
  const Grid g = make_grid(2, 4.0, 64);
  const Signal h = hermite_function(HermiteIndex::of(1, 2), g);
  CHECK(test::max_abs_diff(fourier(h), h.scaled(cplx(0, 1))) < 1e-8);
}
