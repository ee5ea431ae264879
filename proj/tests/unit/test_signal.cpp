#include "doctest.h"

#include <array>
#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/spec.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

TEST_CASE("signal invariants") {
  const Grid g = make_grid(1, 4.0, 16);
  CHECK_THROWS_AS(Signal(g, std::vector<cplx>(15)), PreconditionError);
  std::vector<cplx> bad(16);
  bad[3] = cplx(NAN, 0.0);
  CHECK_THROWS_AS(Signal(g, bad), PreconditionError);
  CHECK(Signal::zeros(g).is_zero());
  CHECK(Signal::zeros(g).closed_form() == nullptr);
}

TEST_CASE("sample_spec gaussian") {
  const Grid g = default_grid(1);
  const auto spec = GaussHermiteSpec::centered(Polynomial::constant(1, 1.0), Eigen::MatrixXd::Identity(1, 1));
  const Signal s = sample_spec(spec, g);
  CHECK(s[128].real() == 1.0);
  CHECK(l2_norm(s) == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
  REQUIRE(s.closed_form() != nullptr);

  const auto odd = GaussHermiteSpec::centered(Polynomial::variable(1, 0), Eigen::MatrixXd::Identity(1, 1));
  CHECK(sample_spec(odd, g)[128] == cplx(0.0));
}

TEST_CASE("sample_spec with center, modulation and chirp") {
  const Grid g = default_grid(1);
  Eigen::MatrixXd a(1, 1), b(1, 1);
  a << 0.8;
  b << 0.3;
  Eigen::VectorXd c(1), w(1);
  c << 0.5;
  w << -0.25;
  const GaussHermiteSpec spec(Polynomial::constant(1, 2.0), a, b, c, w);
  const Signal s = sample_spec(spec, g);
  for (std::size_t i : {100u, 128u, 140u}) {
    const double x = g.point(i)[0];
    const cplx expected = 2.0 * std::polar(1.0, 2 * kPi * -0.25 * x) *
                          std::exp(cplx(-kPi * 0.8 * (x - 0.5) * (x - 0.5), -kPi * 0.3 * x * x));
    CHECK(std::abs(s[i] - expected) < 1e-14);
  }
  CHECK_THROWS_AS(sample_spec(spec, default_grid(2)), PreconditionError);
}

TEST_CASE("spec validation") {
  Eigen::MatrixXd a(2, 2);
  a << 1.0, 0.5, 0.2, 1.0;
  CHECK_THROWS_AS(GaussHermiteSpec::centered(Polynomial::constant(2, 1.0), a), PreconditionError);
  a << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(GaussHermiteSpec::centered(Polynomial::constant(2, 1.0), a), PreconditionError);
}

TEST_CASE("norms and inner products") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  const Signal h1 = hermite_function(HermiteIndex::of(1), g);
  CHECK(std::abs(l2_norm(h0) - 1.0) < 1e-9);
  CHECK(std::abs(inner_product(h0, h1)) < 1e-9);
  std::mt19937_64 rng(7);
  const Signal s = test::superposition(rng, g, 4);
  const cplx self = inner_product(s, s);
  CHECK(self.imag() == 0.0);
  CHECK(self.real() == doctest::Approx(l2_norm(s) * l2_norm(s)).epsilon(1e-14));
  // Conjugate-linear in the second argument.
  const cplx alpha(0.3, -1.2);
  CHECK(std::abs(inner_product(h0, h0.scaled(alpha)) - std::conj(alpha)) < 1e-12);
  CHECK_THROWS_AS(inner_product(h0, hermite_function(HermiteIndex::of(0), make_grid(1, 8.0, 128))),
                  PreconditionError);
}

TEST_CASE("moments") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  const std::array<int, 1> two{2}, zero{0}, one{1}, five{5};
  const std::array<double, 1> origin{0.0}, shifted{1.5};
  // ∫ x^2 sqrt2 e^{-2 pi x^2} dx = 1/(4 pi)
  CHECK(moment(h0, two, origin) == doctest::Approx(1.0 / (4 * kPi)).epsilon(1e-12));
  CHECK(moment(h0, zero, shifted) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(moment(h0, one, origin)) < 1e-15);
  const cplx alpha(2.0, -1.0);
  CHECK(moment(h0.scaled(alpha), two, origin) ==
        doctest::Approx(std::norm(alpha) * moment(h0, two, origin)).epsilon(1e-14));
  CHECK_THROWS_AS(moment(h0, five, origin), PreconditionError);
  const auto mean = mean_position(h0);
  CHECK(std::abs(mean[0]) < 1e-15);
}
