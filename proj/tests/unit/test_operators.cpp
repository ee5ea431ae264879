#include "doctest.h"

#include <array>
#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/hermite.hpp"
#include "tfu/operators.hpp"
#include "tfu/quadrature.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

TEST_CASE("translate") {
  const Grid g = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  const std::array<double, 1> a{g.spacing()};
  const Signal t = translate(h0, a);
  CHECK(t[129] == h0[128]);
  CHECK(t[129].real() == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(l2_norm(t) == l2_norm(h0));
  const std::array<double, 1> off{0.3 * g.spacing()};
  CHECK_THROWS_AS(translate(h0, off), PreconditionError);
  // The exact image is carried along.
  REQUIRE(t.closed_form() != nullptr);
  const std::array<double, 1> x{0.5 + g.spacing()};
  CHECK(std::abs((*t.closed_form())(x) - test::explicit_hermite(0, 0.5)) < 1e-15);
}

TEST_CASE("translate_spectral agrees with lattice translation") {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(11);
  const Signal s = test::superposition(rng, g, 4).without_closed_form();
  const std::array<double, 1> a{5 * g.spacing()};
  CHECK(test::max_abs_diff(translate_spectral(s, a), translate(s, a)) < 1e-12);
}

TEST_CASE("reflect") {
  const Grid g = default_grid(1);
  const Signal h2 = hermite_function(HermiteIndex::of(2), g);
  const Signal r = reflect(h2);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(r[i] == h2[(g.size() - i) % g.size()]);
  std::mt19937_64 rng(3);
  const Signal s = test::superposition(rng, g, 5);
  const Signal rr = reflect(reflect(s));
  bool identical = true;
  for (std::size_t i = 0; i < g.size(); ++i) identical = identical && rr[i] == s[i];
  CHECK(identical);
}

TEST_CASE("modulate") {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(5);
  const Signal s = test::superposition(rng, g, 5);
  const std::array<double, 1> w{0.7};
  const Signal m = modulate(s, w);
  CHECK(std::abs(l2_norm(m) - l2_norm(s)) < 1e-12);
  const double x = g.point(140)[0];
  CHECK(std::abs(m[140] - std::polar(1.0, 2 * kPi * 0.7 * x) * s[140]) < 1e-15);
}

TEST_CASE("dilate") {
  const Grid g = default_grid(1);
  const Signal h1 = hermite_function(HermiteIndex::of(1), g);
  const DilateResult exact = dilate(h1, 2.0);
  CHECK_FALSE(exact.lossy);
  for (std::size_t i : {120u, 128u, 133u}) {
    const double x = g.point(i)[0];
    CHECK(std::abs(exact.signal[i] - std::sqrt(2.0) * test::explicit_hermite(1, 2 * x)) < 1e-14);
  }
  CHECK(std::abs(l2_norm(exact.signal) - 1.0) < 1e-12);

  const DilateResult lossy = dilate(h1.without_closed_form(), 0.5);
  CHECK(lossy.lossy);
  // Linear interpolation: error of order spacing^2 |f''| / 8.
  CHECK(test::max_abs_diff(lossy.signal, dilate(h1, 0.5).signal) < 1e-2);
  CHECK_THROWS_AS(dilate(h1, 0.0), PreconditionError);
  CHECK_THROWS_AS(dilate(h1, -1.0), PreconditionError);
}

TEST_CASE("gaussian mollification") {
  const Grid g = default_grid(1);
  std::vector<cplx> impulse(g.size());
  impulse[128] = 1.0 / g.spacing();
  const Signal m = gaussian_mollify(Signal(g, impulse));
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i)[0];
    err = std::max(err, std::abs(m[i] - std::exp(-kPi * x * x)));
  }
  CHECK(err < 1e-6);
  CHECK(gaussian_mollify(Signal::zeros(g)).is_zero());

  std::mt19937_64 rng(9);
  const Signal s = test::superposition(rng, g, 6);
  CHECK(l2_norm(gaussian_mollify(s)) <= l2_norm(s));

  // e^{-pi x^2} * e^{-pi x^2} = 2^{-1/2} e^{-pi x^2 / 2}
  const Signal h0 = hermite_function(HermiteIndex::of(0), g);
  const Signal gh = gaussian_mollify(h0);
  for (std::size_t i : {110u, 128u, 150u}) {
    const double x = g.point(i)[0];
    CHECK(std::abs(gh[i] - std::pow(2.0, 0.25) * std::exp(-kPi * x * x / 2) / std::sqrt(2.0)) < 1e-12);
  }
}
