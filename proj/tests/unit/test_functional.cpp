#include "doctest.h"

#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/functional.hpp"

using namespace tfu;

namespace {

Grid wide() { return make_grid(1, 64.0, 1024); }

Signal h(int k, const Grid& g) { return hermite_function(HermiteIndex::of(k), g); }

FunctionalTrace synthetic(const std::vector<double>& radii, double (*log_i)(double)) {
  FunctionalTrace t;
  t.radii = radii;
  for (double r : radii) {
    t.log_values.push_back(log_i(r));
    t.values.push_back(std::exp(log_i(r)));
  }
  classify(t);
  return t;
}

}  // namespace

TEST_CASE("classify on synthetic traces") {
  const std::vector<double> radii = default_radii(64.0);
  const FunctionalTrace flat = synthetic(radii, [](double r) { return std::log(3.0 - std::exp(-r)); });
  CHECK(flat.verdict == Verdict::Convergent);
  const FunctionalTrace linear = synthetic(radii, [](double r) { return std::log(r); });
  CHECK(linear.verdict == Verdict::DivergentPolynomial);
  CHECK(linear.growth_exponent == doctest::Approx(1.0).epsilon(1e-9));
  const FunctionalTrace cubic = synthetic(radii, [](double r) { return 3.0 * std::log(r); });
  CHECK(cubic.verdict == Verdict::DivergentPolynomial);
  const FunctionalTrace fast = synthetic(radii, [](double r) { return r * r; });
  CHECK(fast.verdict == Verdict::DivergentFast);
}

TEST_CASE("radii validation") {
  CHECK(resolve_radii({}, 8.0) == default_radii(8.0));
  const std::vector<double> bad_order{1.0, 3.0, 2.0}, too_far{1.0, 9.0}, negative{-1.0, 2.0};
  CHECK_THROWS_AS(resolve_radii(bad_order, 8.0), PreconditionError);
  CHECK_THROWS_AS(resolve_radii(too_far, 8.0), PreconditionError);
  CHECK_THROWS_AS(resolve_radii(negative, 8.0), PreconditionError);
}

TEST_CASE("beurling-hormander dichotomy") {
  const Grid g = wide();
  const Signal h0 = h(0, g), h2 = h(2, g);
  for (double n : {0.0, 1.0}) CHECK(is_divergent(bh_functional(h0, n).verdict));
  for (double n : {2.0, 4.0}) CHECK(bh_functional(h0, n).verdict == Verdict::Convergent);
  CHECK(is_divergent(bh_functional(h2, 4.0).verdict));
  CHECK(bh_functional(h2, 8.0).verdict == Verdict::Convergent);
  for (double n : {0.0, 4.0}) CHECK(bh_functional_split(h2, n).verdict == bh_functional(h2, n).verdict);

  const FunctionalTrace t = bh_functional(h2, 8.0);
  for (std::size_t i = 1; i < t.values.size(); ++i) CHECK(t.values[i] >= t.values[i - 1]);
  CHECK_THROWS_AS(bh_functional(Signal::zeros(g), 0.0), PreconditionError);
}

TEST_CASE("bh growth of the gaussian") {
  const FunctionalTrace t = bh_functional(h(0, wide()), 0.0);
  // Closed form of the truncated integral for h0.
  const double r = t.radii.back();
  const double oracle =
      8.0 * std::sqrt(2.0) * (r * std::erf(std::sqrt(kPi) * r) / 2.0 - (1.0 - std::exp(-kPi * r * r)) / (2.0 * kPi));
  CHECK(t.values.back() == doctest::Approx(oracle).epsilon(1e-2));
  CHECK(t.growth_exponent == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("cowling-price") {
  const Signal h0 = h(0, wide());
  const CowlingPriceResult finite = cowling_price(h0, 1.0, 1.0, 2.0, 0);
  CHECK(finite.f_trace.verdict == Verdict::Convergent);
  CHECK(finite.fhat_trace.verdict == Verdict::Convergent);
  CHECK(finite.both_finite_allowed);
  CHECK(finite.both_convergent);
  const CowlingPriceResult flat = cowling_price(h0, 1.0, 1.0, 0.0, 0);
  CHECK(is_divergent(flat.f_trace.verdict));
  CHECK(is_divergent(flat.fhat_trace.verdict));
  const CowlingPriceResult fast = cowling_price(h(0, default_grid(1)), 1.2, 1.0, 2.0, 0);
  CHECK(fast.f_trace.verdict == Verdict::DivergentFast);
  CHECK_FALSE(fast.both_finite_allowed);
  CHECK(fast.ab == doctest::Approx(1.2));
}

TEST_CASE("overflow is a numerical error") {
  CHECK_THROWS_AS(cowling_price(h(0, default_grid(1)), 1000.0, 1.0, 0.0, 0), NumericalError);
}

TEST_CASE("gelfand-shilov constants and regimes") {
  CHECK(gelfand_shilov_critical(1.5) == doctest::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(gelfand_shilov_critical(4.0 / 3.0) == doctest::Approx(std::pow(0.5, 0.75)).epsilon(1e-14));
  const Signal h0 = h(0, default_grid(1));
  CHECK_THROWS_AS(gelfand_shilov(h0, 1.0, 1.0, 1.0, 0), PreconditionError);
  CHECK_THROWS_AS(gelfand_shilov(h0, 2.0, 1.0, 1.0, 0), PreconditionError);

  const double c = gelfand_shilov_critical(1.5);
  const GelfandShilovResult sub = gelfand_shilov(h0, 1.5, 1.0, 0.5 * c, 0);
  CHECK(sub.regime == "subcritical");
  CHECK(sub.q == doctest::Approx(3.0));
  CHECK(sub.x_trace.verdict == Verdict::Convergent);
  CHECK(sub.y_trace.verdict == Verdict::Convergent);
  CHECK(gelfand_shilov(h0, 1.5, 1.0, c, 0).regime == "critical");
  const std::vector<double> near{1.0, 2.0, 3.0};
  CHECK(gelfand_shilov(h0, 1.5, 1.0, 2 * c, 0, near).regime == "supercritical");
  CHECK_THROWS_AS(gelfand_shilov(h0, 1.5, 1.0, 2 * c, 0), NumericalError);

  const double a_fast = std::pow(24.0, (2.0 - 1.5) / 1.5);
  CHECK(gelfand_shilov(h0, 1.5, a_fast, 0.5 * c / a_fast, 0).x_trace.verdict == Verdict::DivergentFast);
}

TEST_CASE("gelfand-shilov ambiguity variant") {
  const Grid g = default_grid(1);
  const GelfandShilovAmbiguityResult z = gelfand_shilov_ambiguity(Signal::zeros(g), h(0, g), 1.5, 1.0, 1.0, 0);
  CHECK(z.x_trace.verdict == Verdict::Convergent);
  CHECK(z.y_trace.verdict == Verdict::Convergent);
  for (double v : z.x_trace.values) CHECK(v == 0.0);
}

TEST_CASE("hardy cases") {
  for (int d : {1, 2}) {
    const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(d, d);
    CHECK(hardy_case(i, i) == 2);
    CHECK(hardy_case(i, 2.0 * i) == 1);
    CHECK(hardy_case(i, 0.5 * i) == 3);
  }
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 2, 0, 0, 1;
  b << 0.5, 0, 0, 3;
  CHECK(hardy_case(a, b) == 1);
}

TEST_CASE("hardy envelopes") {
  const Grid g = wide();
  const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(1, 1);
  const HardyResult h0 = hardy_check(h(0, g), i1, i1, 0.0);
  CHECK(h0.envelope_ok_f);
  CHECK(h0.envelope_ok_fhat);
  CHECK(h0.c_f == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-8));
  CHECK(h0.c_fhat == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-8));
  CHECK(h0.hardy_case == 2);
  const HardyResult poly = hardy_check(h(3, g), i1, i1, 3.0);
  CHECK(poly.envelope_ok_f);
  CHECK(poly.envelope_ok_fhat);
  const HardyResult flat = hardy_check(h(3, g), i1, i1, 0.0);
  CHECK_FALSE(flat.envelope_ok_f);
  CHECK_FALSE(flat.envelope_ok_fhat);
}

TEST_CASE("ambiguity functionals") {
  const Grid g = wide();
  const Signal h0 = h(0, g), h1 = h(1, g);
  const HbaResult two = hba_functionals(h0, h0, 2.0);
  CHECK(two.marginal_x.verdict == Verdict::Convergent);
  CHECK(two.marginal_y.verdict == Verdict::Convergent);
  CHECK(is_divergent(two.joint.verdict));
  CHECK(hba_functionals(h0, h0, 4.0).joint.verdict == Verdict::Convergent);

  const HbaResult mixed = hba_functionals(h0, h1, 6.0);
  CHECK(mixed.joint.verdict == Verdict::Convergent);
  CHECK(mixed.marginal_x.verdict == Verdict::Convergent);
  CHECK(mixed.marginal_y.verdict == Verdict::Convergent);

  // |A(h0,h0)|^2 e^{pi(x^2+y^2)} = 1: the truncated joint integral is 4R^2.
  const FunctionalTrace area = hba_functionals(h0, h0, 0.0).joint;
  CHECK(area.growth_exponent == doctest::Approx(2.0).epsilon(0.1));
  CHECK_THROWS_AS(hba_functionals(h0, h(0, default_grid(1)), 0.0), PreconditionError);
}
