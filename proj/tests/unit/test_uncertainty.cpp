#include "doctest.h"

#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/uncertainty.hpp"
#include "unit/helpers.hpp"

using namespace tfu;

namespace {

constexpr double kFourPiSq = 4 * kPi * kPi;

Signal h(int k, const Grid& g) { return hermite_function(HermiteIndex::of(k), g); }

}  // namespace

TEST_CASE("fourier heisenberg") {
  const Grid g = default_grid(1);
  const HeisenbergReport r0 = heisenberg_fourier(h(0, g), 0, 0.0, 0.0);
  CHECK(r0.factor1 == doctest::Approx(1 / (4 * kPi)).epsilon(1e-10));
  CHECK(r0.factor2 == doctest::Approx(1 / (4 * kPi)).epsilon(1e-10));
  CHECK(r0.bound == doctest::Approx(1 / (4 * kFourPiSq)).epsilon(1e-10));
  CHECK(std::abs(r0.ratio - 1.0) < 1e-6);

  // ∫x^2 h1^2 = 3/(4 pi), from the explicit formula by quadrature.
  double m2 = 0.0;
  for (int k = -4000; k <= 4000; ++k) {
    const double x = k * 0.002;
    m2 += x * x * std::pow(test::explicit_hermite(1, x), 2) * 0.002;
  }
  const HeisenbergReport r1 = heisenberg_fourier(h(1, g), 0);
  CHECK(r1.factor1 == doctest::Approx(m2).epsilon(1e-9));
  CHECK(r1.factor2 == doctest::Approx(m2).epsilon(1e-9));
  CHECK(std::abs(r1.ratio - 9.0) < 1e-3);

  std::mt19937_64 rng(41);
  const Signal s = test::superposition(rng, g, 5);
  CHECK(heisenberg_fourier(s.scaled(2.0), 0).ratio == doctest::Approx(heisenberg_fourier(s, 0).ratio).epsilon(1e-12));
  CHECK(heisenberg_fourier(s, 0).ratio >= 1 - 1e-6);
  CHECK_THROWS_AS(heisenberg_fourier(Signal::zeros(g), 0), PreconditionError);
}

TEST_CASE("explicit centers") {
  const Grid g = default_grid(1);
  // Off-center factors add the squared offset times the mass.
  const HeisenbergReport r = heisenberg_fourier(h(0, g), 0, 0.5, -0.25);
  CHECK(r.factor1 == doctest::Approx(1 / (4 * kPi) + 0.25).epsilon(1e-10));
  CHECK(r.factor2 == doctest::Approx(1 / (4 * kPi) + 0.0625).epsilon(1e-10));
  CHECK(r.center_a == 0.5);
}

TEST_CASE("ambiguity heisenberg") {
  const Grid g = default_grid(1);
  const HeisenbergReport r0 = heisenberg_ambiguity(h(0, g), h(0, g), 0, 0.0, 0.0);
  CHECK(r0.factor1 == doctest::Approx(1 / (2 * kPi)).epsilon(1e-8));
  CHECK(r0.factor2 == doctest::Approx(1 / (2 * kPi)).epsilon(1e-8));
  CHECK(std::abs(r0.ratio - 1.0) < 1e-5);
  CHECK(heisenberg_ambiguity(h(1, g), h(1, g), 0).ratio > 1 + 1e-3);

  std::mt19937_64 rng(42);
  const Signal u = test::superposition(rng, g, 5), v = test::superposition(rng, g, 5);
  const double uv = heisenberg_ambiguity(u, v, 0).ratio;
  CHECK(heisenberg_ambiguity(v, u, 0).ratio == doctest::Approx(uv).epsilon(1e-10));
  CHECK(heisenberg_ambiguity(u.scaled(cplx(0, 3)), v.scaled(0.5), 0).ratio == doctest::Approx(uv).epsilon(1e-12));
  CHECK(uv >= 1 - 1e-6);
  CHECK_THROWS_AS(heisenberg_ambiguity(u, Signal::zeros(g), 0), PreconditionError);
}

TEST_CASE("covariance of the gaussian pair") {
  const Grid g = default_grid(1);
  const CovarianceReport r = covariance_report(h(0, g), h(0, g));
  CHECK(r.v_x(0, 0) == doctest::Approx(1 / (2 * kPi)).epsilon(1e-8));
  CHECK(r.v_y(0, 0) == doctest::Approx(1 / (2 * kPi)).epsilon(1e-8));
  CHECK(std::abs(r.cross_cov(0, 0)) < 1e-6);
  CHECK(r.gap_matrix.cwiseAbs().maxCoeff() < 1e-4);
  CHECK(r.equality_case);
  CHECK_FALSE(r.correlated);
  CHECK(r.semidefinite);
  CHECK(std::abs(r.total_mass - r.norm_product_sq) < 1e-7);
  CHECK(r.det_product == doctest::Approx(r.det_bound_sharp).epsilon(1e-8));
  CHECK(r.det_bound == doctest::Approx(std::pow(kFourPiSq, -2)).epsilon(1e-14));
  CHECK(r.trace_product == doctest::Approx(r.trace_bound).epsilon(1e-8));
}

TEST_CASE("covariance strictness for h1") {
  const Grid g = default_grid(1);
  const CovarianceReport r = covariance_report(h(1, g), h(1, g));
  CHECK(r.min_eigenvalue > 1e-3);
  CHECK_FALSE(r.equality_case);
  CHECK(r.det_product >= r.det_bound_sharp);
  CHECK(r.trace_product >= r.trace_bound);
}

TEST_CASE("covariance on random pairs") {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 4; ++i) {
    const Signal u = test::superposition(rng, g, 6), v = test::superposition(rng, g, 6);
    const CovarianceReport r = covariance_report(u, v);
    CHECK(r.min_eigenvalue >= -1e-5);
    CHECK(r.det_product >= r.det_bound * (1 - 1e-4));
    CHECK(r.trace_product >= r.trace_bound * (1 - 1e-4));
    CHECK(std::abs(r.total_mass - r.norm_product_sq) < 1e-7 * r.norm_product_sq);
  }
  CHECK_THROWS_AS(covariance_report(Signal::zeros(g), h(0, g)), PreconditionError);
}

TEST_CASE("covariance in two dimensions") {
  const Grid g = make_grid(2, 4.0, 64);
  const Signal h00 = hermite_function(HermiteIndex::of(0, 0), g);
  const CovarianceReport r = covariance_report(h00, h00);
  CHECK(r.dim == 2);
  CHECK(r.cross_cov.cwiseAbs().maxCoeff() < 1e-6);
  CHECK(r.gap_matrix.cwiseAbs().maxCoeff() < 1e-4);
  // Tensor-product Gaussian moments: V_X = V_Y = I/(2 pi).
  CHECK(r.det_product == doctest::Approx(std::pow(2 * kPi, -4)).epsilon(1e-8));
  CHECK(r.det_product >= r.det_bound);
  CHECK(r.det_bound == doctest::Approx(std::pow(kFourPiSq, -4)).epsilon(1e-14));
}
