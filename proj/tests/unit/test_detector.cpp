#include "doctest.h"

#include <cmath>

#include "tfu/detector.hpp"
#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/operators.hpp"
#include "tfu/spec.hpp"

using namespace tfu;

namespace {

Signal h(int k, const Grid& g) { return hermite_function(HermiteIndex::of(k), g); }

Signal from_function(const Grid& g, cplx (*f)(double)) {
  std::vector<cplx> s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s[i] = f(g.point(i)[0]);
  return Signal(g, std::move(s));
}

}  // namespace

TEST_CASE("gaussian is detected") {
  const DetectionResult r = detect(h(0, default_grid(1)));
  CHECK(r.is_gauss_hermite);
  CHECK(r.degree_est == 0);
  CHECK(r.a_est(0, 0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.residual < kDetectResidualThreshold);
  CHECK(r.bh_consistent);
  CHECK_FALSE(r.chirp_detected);
  // N = d and N = 2m + d coincide for m = 0.
  REQUIRE(r.bh_verdicts.size() == 2);
  CHECK(is_divergent(r.bh_verdicts.at(1.0)));
  CHECK(r.bh_verdicts.at(3.0) == Verdict::Convergent);
}

TEST_CASE("h3 degree and width") {
  const DetectionResult coarse = detect(h(3, default_grid(1)));
  CHECK(coarse.degree_est == 3);
  CHECK(coarse.a_est(0, 0) == doctest::Approx(1.0).epsilon(1e-4));

  const DetectionResult full = detect(h(3, make_grid(1, 64.0, 2048)));
  CHECK(full.is_gauss_hermite);
  CHECK(full.degree_est == 3);
  CHECK(full.bh_consistent);
}

TEST_CASE("dilated superposition") {
  const Grid g = make_grid(1, 64.0, 2048);
  Polynomial poly = hermite_polynomial(2, 1, 0);
  poly += Polynomial::constant(1, cplx(0.5, -0.25));
  const GaussHermiteSpec spec = GaussHermiteSpec::centered(poly, Eigen::MatrixXd::Constant(1, 1, 1.5));
  const DetectionResult r = detect(sample_spec(spec, g));
  CHECK(r.is_gauss_hermite);
  CHECK(r.degree_est == 2);
  CHECK(r.a_est(0, 0) == doctest::Approx(1.5).epsilon(1e-4));
}

TEST_CASE("non-gaussian decay is rejected") {
  const Grid g = default_grid(1);
  const DetectionResult r = detect(from_function(g, [](double x) { return cplx(1.0 / (1.0 + x * x)); }));
  CHECK_FALSE(r.is_gauss_hermite);
  CHECK(r.residual >= kDetectResidualThreshold);
  CHECK_FALSE(detect(from_function(g, [](double x) { return cplx(std::exp(-std::abs(x))); })).is_gauss_hermite);
}

TEST_CASE("scaling does not change the verdict") {
  const Grid g = default_grid(1);
  const Signal h2 = h(2, g);
  const DetectionResult a = detect(h2), b = detect(h2.scaled(cplx(0, 7.5)));
  CHECK(a.degree_est == b.degree_est);
  CHECK(a.a_est(0, 0) == doctest::Approx(b.a_est(0, 0)).epsilon(1e-8));
  CHECK(a.is_gauss_hermite == b.is_gauss_hermite);
}

TEST_CASE("zero signal") { CHECK_THROWS_AS(detect(Signal::zeros(default_grid(1))), PreconditionError); }

TEST_CASE("chirp is flagged") {
  const Grid g = default_grid(1);
  for (double b : {0.5, 1.0}) {
    std::vector<cplx> s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.point(i)[0];
      s[i] = std::exp(cplx(-kPi * x * x, -kPi * b * x * x));
    }
    const DetectionResult r = detect(Signal(g, std::move(s)));
    CHECK_FALSE(r.is_gauss_hermite);
    CHECK(r.chirp_detected);
    CHECK(r.chirp_est(0, 0) == doctest::Approx(b).epsilon(0.05));
  }
}

TEST_CASE("equality probe") {
  const Grid g = default_grid(1);
  const Signal h0 = h(0, g);
  const EqualityProbe same = equality_case_probe(h0, h0);
  CHECK(same.is_equality_pair);
  REQUIRE(same.detect_u.has_value());
  CHECK(same.detect_u->degree_est == 0);

  const EqualityProbe excited = equality_case_probe(h(1, g), h(1, g));
  CHECK_FALSE(excited.is_equality_pair);
  CHECK_FALSE(excited.detect_u.has_value());

  const std::array<double, 1> shift{8 * g.spacing()}, freq{0.5};
  const Signal moved = modulate(translate(h0, shift), freq);
  CHECK(equality_case_probe(moved, moved).is_equality_pair);
}

TEST_CASE("two-dimensional gaussian") {
  const Grid g = make_grid(2, 6.0, 64);
  Eigen::MatrixXd a(2, 2);
  a << 1.2, 0.3, 0.3, 0.8;
  const GaussHermiteSpec spec = GaussHermiteSpec::centered(Polynomial::constant(2, 1.0), a);
  const DetectionResult r = detect(sample_spec(spec, g));
  CHECK(r.degree_est == 0);
  CHECK((r.a_est - a).cwiseAbs().maxCoeff() < 1e-3);
  CHECK(r.residual < kDetectResidualThreshold);
}
