#include "tfu/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "tfu/detector.hpp"
#include "tfu/errors.hpp"
#include "tfu/functional.hpp"
#include "tfu/hermite.hpp"
#include "tfu/identities.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/spec.hpp"
#include "tfu/transforms.hpp"
#include "tfu/uncertainty.hpp"

namespace tfu {
namespace {

constexpr double kFourPiSq = 4.0 * kPi * kPi;

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  std::array<char, 512> buffer{};
  std::vsnprintf(buffer.data(), buffer.size(), format, args);
  va_end(args);
  return buffer.data();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

char verdict_letter(Verdict v) {
  switch (v) {
    case Verdict::Convergent:
      return 'C';
    case Verdict::DivergentPolynomial:
      return 'P';
    case Verdict::DivergentFast:
      return 'F';
  }
  return '?';
}

// Wide lattice for slowly converging tails; detector lattice keeps >= 50 fit
// points after mollification at every tested A.
Grid wide_grid() { return Grid(1, 64.0, 1024); }
Grid detector_grid() { return Grid(1, 64.0, 2048); }

Signal hermite(int k, const Grid& g) { return hermite_function(HermiteIndex::of(k), g); }

// Random superposition of h_0..h_m with m uniform in [0, max_order] and
// complex coefficients in the unit square; the top coefficient has modulus >= 0.3.
Signal random_superposition(std::mt19937_64& rng, const Grid& g, int max_order) {
  std::uniform_int_distribution<int> order(0, max_order);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int m = order(rng);
  HermiteCoefficients c;
  for (int k = 0; k <= m; ++k) c[HermiteIndex::of(k)] = cplx(unit(rng), unit(rng));
  cplx& top = c[HermiteIndex::of(m)];
  if (std::abs(top) < 0.3) top = std::abs(top) > 0.0 ? top * (0.3 / std::abs(top)) : cplx(0.3, 0.0);
  return hermite_synthesize(c, g);
}

double pow4(double x) { return x * x * x * x; }

// ‖u‖^4 ‖v‖^4 / (4 pi^2); the mutation multiplies by 4 pi^2 instead.
double ambiguity_bound(const Signal& u, const Signal& v, bool mutate) {
  const double norms = pow4(l2_norm(u)) * pow4(l2_norm(v));
  return mutate ? norms * kFourPiSq : norms / kFourPiSq;
}

// Least-squares slope of log I against log R over the top half of the radii.
double top_half_slope(const std::vector<double>& radii, const std::function<double(double)>& log_value) {
  const std::size_t start = radii.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  for (std::size_t i = start; i < radii.size(); ++i) {
    const double x = std::log(radii[i]);
    const double y = log_value(radii[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1.0;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

CriterionResult moyal() {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(101);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Signal u = random_superposition(rng, g, 6);
    const Signal v = random_superposition(rng, g, 6);
    const MoyalNorms m = moyal_norm(u, v);
    worst = std::max(worst, std::abs(m.surface_norm - m.product_norm) / m.product_norm);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = seconds < 60.0;
  return {1, "moyal", worst < 1e-7 && fast,
          fmt("pairs=100 max_rel_gap=%.3e tol=1e-07 under_60s=%s", worst, yes_no(fast))};
}

CriterionResult gaussian_ambiguity() {
  const Grid g = default_grid(1);
  const Signal h0 = hermite(0, g);
  const Surface a = ambiguity(h0, h0);
  double worst = 0.0;
  for (std::size_t ix = 0; ix < a.x_grid().size(); ++ix) {
    const double x = a.x_grid().point(ix)[0];
    for (std::size_t iy = 0; iy < a.y_grid().size(); ++iy) {
      const double y = a.y_grid().point(iy)[0];
      worst = std::max(worst, std::abs(a.at(ix, iy) - std::exp(-kPi * (x * x + y * y) / 2)));
    }
  }
  return {2, "gaussian-ambiguity", worst < 1e-8, fmt("max_error=%.3e tol=1e-08 samples=%zu", worst, a.size())};
}

// Fine Riemann sums of the explicit h_1 = 2^{1/4} 2 sqrt(pi) x exp(-pi x^2)
// and of its Fourier integral evaluated point by point.
double h1_ratio_oracle() {
  const double c = std::pow(2.0, 0.25) * 2.0 * std::sqrt(kPi);
  auto h1 = [c](double x) { return c * x * std::exp(-kPi * x * x); };
  const double step = 1.0 / 64;
  const int half = 8 * 64;
  double norm_sq = 0.0, fx = 0.0;
  for (int k = -half; k <= half; ++k) {
    const double x = k * step;
    norm_sq += h1(x) * h1(x) * step;
    fx += x * x * h1(x) * h1(x) * step;
  }
  double fy = 0.0;
  for (int j = -half; j <= half; ++j) {
    const double y = j * step;
    cplx hat{};
    for (int k = -half; k <= half; ++k) {
      const double t = k * step;
      hat += h1(t) * std::polar(1.0, -2.0 * kPi * t * y) * step;
    }
    fy += y * y * std::norm(hat) * step;
  }
  return fx * fy / (norm_sq * norm_sq / (4.0 * kFourPiSq));
}

CriterionResult heisenberg_fourier_sharp() {
  const Grid g = default_grid(1);
  const double r0 = heisenberg_fourier(hermite(0, g), 0).ratio;
  const double r1 = heisenberg_fourier(hermite(1, g), 0).ratio;
  const double oracle = h1_ratio_oracle();
  std::mt19937_64 rng(303);
  double min_ratio = INFINITY;
  for (int i = 0; i < 100; ++i) min_ratio = std::min(min_ratio, heisenberg_fourier(random_superposition(rng, g, 6), 0).ratio);
  const bool pass = std::abs(r0 - 1.0) < 1e-6 && min_ratio >= 1.0 - 1e-6 && std::abs(r1 - 9.0) < 1e-3 &&
                    std::abs(r1 - oracle) < 1e-3;
  return {3, "heisenberg-fourier", pass,
          fmt("h0_ratio=%.9f h1_ratio=%.6f h1_oracle=%.6f random_min_ratio=%.6f", r0, r1, oracle, min_ratio)};
}

CriterionResult heisenberg_ambiguity_sharp(bool mutate) {
  const Grid g = default_grid(1);
  double worst_bound = 0.0;
  auto ratio = [&](const Signal& u, const Signal& v) {
    const HeisenbergReport r = heisenberg_ambiguity(u, v, 0);
    const double reference = ambiguity_bound(u, v, mutate);
    worst_bound = std::max(worst_bound, std::abs(r.bound - reference) / reference);
    return r.product / reference;
  };
  const Signal h0 = hermite(0, g);
  const double r0 = ratio(h0, h0);
  std::mt19937_64 rng(404);
  double min_ratio = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const Signal u = random_superposition(rng, g, 6);
    const Signal v = random_superposition(rng, g, 6);
    min_ratio = std::min(min_ratio, ratio(u, v));
  }
  const bool pass = std::abs(r0 - 1.0) < 1e-5 && min_ratio >= 1.0 - 1e-6 && worst_bound < 1e-12;
  return {4, "heisenberg-ambiguity", pass,
          fmt("h0_ratio=%.9f random_pairs=20 random_min_ratio=%.6f bound_rel_diff=%.3e", r0, min_ratio, worst_bound)};
}

CriterionResult covariance(bool mutate) {
  struct Pair {
    Signal u;
    Signal v;
    bool gaussian;
    bool strict;
  };
  const Grid g1 = default_grid(1);
  const Grid g2(2, 4.0, 64);
  std::vector<Pair> pairs;
  pairs.push_back({hermite(0, g1), hermite(0, g1), true, false});
  pairs.push_back({hermite(1, g1), hermite(1, g1), false, true});
  pairs.push_back({hermite(0, g1), hermite(1, g1), false, false});
  std::mt19937_64 rng(505);
  for (int i = 0; i < 5; ++i) {
    Signal u = random_superposition(rng, g1, 6);
    Signal v = random_superposition(rng, g1, 6);
    pairs.push_back({std::move(u), std::move(v), false, false});
  }
  const Signal h00 = hermite_function(HermiteIndex::of(0, 0), g2);
  pairs.push_back({h00, h00, true, false});
  pairs.push_back({hermite_function(HermiteIndex::of(1, 0), g2), hermite_function(HermiteIndex::of(0, 1), g2), false,
                   false});

  bool pass = true;
  double gauss_cross = 0.0, gauss_gap = 0.0, strict_min = INFINITY, det_margin = INFINITY, trace_margin = INFINITY;
  for (const Pair& p : pairs) {
    const CovarianceReport r = covariance_report(p.u, p.v);
    const int d = r.dim;
    if (p.gaussian) {
      gauss_cross = std::max(gauss_cross, r.cross_cov.cwiseAbs().maxCoeff());
      gauss_gap = std::max(gauss_gap, r.gap_matrix.cwiseAbs().maxCoeff());
    }
    if (p.strict) strict_min = std::min(strict_min, r.min_eigenvalue);
    const double det_bound = std::pow(kFourPiSq, -2.0 * d);
    det_margin = std::min(det_margin, r.det_product / det_bound);
    const double trace_bound = d * d * ambiguity_bound(p.u, p.v, mutate);
    trace_margin = std::min(trace_margin, r.trace_product / trace_bound);
  }
  pass = gauss_cross < 1e-6 && gauss_gap < 1e-4 && strict_min > 1e-3 && det_margin >= 1.0 - 1e-4 &&
         trace_margin >= 1.0 - 1e-4;
  return {5, "covariance", pass,
          fmt("pairs=%zu gaussian_cross=%.3e gaussian_gap=%.3e h1_min_eig=%.6f det_ratio_min=%.6f "
              "trace_ratio_min=%.6f",
              pairs.size(), gauss_cross, gauss_gap, strict_min, det_margin, trace_margin)};
}

CriterionResult lem0() {
  // Twice the default sampling rate: D_2 of an order-4 superposition has a
  // cross-section spectrum reaching the default Nyquist edge |y| = 8.
  const Grid g(1, 8.0, 512);
  const double dx = g.spacing();
  const double dy = 1.0 / (2.0 * g.half_extent());
  std::mt19937_64 rng(606);
  // Shifts within ±1, frequency offsets within ±1.
  std::uniform_int_distribution<int> shift(-32, 32), half_gap(-16, 16), freq(-16, 16);
  const std::array<double, 3> lambdas{1.0, 0.5, 2.0};
  double worst = 0.0;
  bool lossy = false, empty = false;
  for (int i = 0; i < 20; ++i) {
    const Signal u = random_superposition(rng, g, 4);
    const Signal v = random_superposition(rng, g, 4);
    OperatorParams p;
    p.shift_u[0] = shift(rng) * dx;
    p.shift_v[0] = p.shift_u[0] + 2 * half_gap(rng) * dx;
    p.modulation_v[0] = freq(rng) * dy;
    p.modulation_u[0] = p.modulation_v[0] + freq(rng) * dy;
    p.dilation = lambdas[static_cast<std::size_t>(i % 3)];
    const Lem0Report r = verify_lem0(u, v, p);
    worst = std::max(worst, r.max_error());
    lossy = lossy || r.dilation_lossy;
    for (std::size_t c : r.compared) empty = empty || c == 0;
  }
  return {6, "lem0", worst < 1e-9 && !lossy && !empty,
          fmt("parameter_sets=20 max_error=%.3e tol=1e-09 lossy=%s", worst, yes_no(lossy))};
}

CriterionResult fouramb() {
  const Grid g = default_grid(1);
  const std::array<std::array<int, 3>, 3> triples{{{0, 0, 0}, {0, 0, 1}, {1, 0, 2}}};
  double worst = 0.0;
  bool empty = false;
  for (const auto& t : triples) {
    const FourambReport r = verify_fouramb(hermite(t[0], g), hermite(t[1], g), hermite(t[2], g));
    worst = std::max(worst, r.max_error);
    empty = empty || r.compared == 0;
  }
  return {7, "fouramb", worst < 1e-6 && !empty, fmt("triples=3 max_error=%.3e tol=1e-06", worst)};
}

CriterionResult wigner_relation() {
  const Grid g = default_grid(1);
  std::mt19937_64 rng(808);
  double worst = 0.0;
  std::size_t compared = 0;
  for (int i = 0; i < 10; ++i) {
    const Signal u = random_superposition(rng, g, 6);
    const Signal v = random_superposition(rng, g, 6);
    const IdentityCheck c = verify_wigner_relation(u, v);
    worst = std::max(worst, c.max_error);
    compared += c.compared;
  }
  return {8, "wigner", worst < 1e-8 && compared > 0,
          fmt("pairs=10 max_error=%.3e tol=1e-08 compared=%zu", worst, compared)};
}

CriterionResult bh_dichotomy() {
  const Grid g = wide_grid();
  const std::array<int, 3> degrees{0, 2, 4};
  const std::array<double, 5> exponents{0, 1, 2, 4, 8};
  int mismatches = 0, split_mismatches = 0;
  std::string table;
  for (int k : degrees) {
    const Signal f = hermite(k, g);
    table += fmt(" h%d:", k);
    for (double n : exponents) {
      const Verdict v = bh_functional(f, n).verdict;
      const Verdict s = bh_functional_split(f, n).verdict;
      const bool expect_finite = k < (n - 1.0) / 2.0;
      if (is_divergent(v) == expect_finite) ++mismatches;
      if (v != s) ++split_mismatches;
      table += verdict_letter(v);
    }
  }
  return {9, "bh-dichotomy", mismatches == 0 && split_mismatches == 0,
          fmt("N=0,1,2,4,8%s mismatches=%d split_mismatches=%d", table.c_str(), mismatches, split_mismatches)};
}

CriterionResult divergence_exponents() {
  const Grid g = wide_grid();
  const Signal h0 = hermite(0, g);
  const FunctionalTrace bh = bh_functional(h0, 0.0);
  const FunctionalTrace joint = hba_functionals(h0, h0, 0.0).joint;
  // |h0(x)||h0^(y)| e^{2 pi |xy|} = sqrt2 e^{-pi (|x|-|y|)^2}; over the square
  // of half-side R this integrates to 8 sqrt2 (R erf(sqrt(pi) R)/2 - (1 - e^{-pi R^2})/(2 pi)).
  const double bh_oracle = top_half_slope(bh.radii, [](double r) {
    return std::log(8.0 * std::sqrt(2.0) *
                    (r * std::erf(std::sqrt(kPi) * r) / 2.0 - (1.0 - std::exp(-kPi * r * r)) / (2.0 * kPi)));
  });
  // |A(h0,h0)|^2 e^{pi(x^2+y^2)} = 1: the truncated integral is the area 4R^2.
  const double joint_oracle = top_half_slope(joint.radii, [](double r) { return std::log(4.0 * r * r); });
  const bool pass = std::abs(bh.growth_exponent - 1.0) < 0.1 && std::abs(joint.growth_exponent - 2.0) < 0.2 &&
                    std::abs(bh.growth_exponent - bh_oracle) < 0.1 &&
                    std::abs(joint.growth_exponent - joint_oracle) < 0.2;
  return {10, "divergence-exponents", pass,
          fmt("bh_h0_N0=%.4f oracle=%.4f hba_joint_N0=%.4f oracle=%.4f", bh.growth_exponent, bh_oracle,
              joint.growth_exponent, joint_oracle)};
}

CriterionResult cowling_price_check() {
  const Signal wide = hermite(0, wide_grid());
  const CowlingPriceResult finite = cowling_price(wide, 1.0, 1.0, 2.0, 0);
  const CowlingPriceResult flat = cowling_price(wide, 1.0, 1.0, 0.0, 0);
  const CowlingPriceResult fast = cowling_price(hermite(0, default_grid(1)), 1.2, 1.0, 2.0, 0);
  const bool pass = finite.f_trace.verdict == Verdict::Convergent &&
                    finite.fhat_trace.verdict == Verdict::Convergent && is_divergent(flat.f_trace.verdict) &&
                    is_divergent(flat.fhat_trace.verdict) && fast.f_trace.verdict == Verdict::DivergentFast;
  return {11, "cowling-price", pass,
          fmt("N2=%c%c(%.4f,%.4f) N0=%c%c(%.4f,%.4f) a1.2=%c(%.4f)", verdict_letter(finite.f_trace.verdict),
              verdict_letter(finite.fhat_trace.verdict), finite.f_trace.growth_exponent,
              finite.fhat_trace.growth_exponent, verdict_letter(flat.f_trace.verdict),
              verdict_letter(flat.fhat_trace.verdict), flat.f_trace.growth_exponent,
              flat.fhat_trace.growth_exponent, verdict_letter(fast.f_trace.verdict),
              fast.f_trace.growth_exponent)};
}

CriterionResult gelfand_shilov_check() {
  const Grid g = default_grid(1);
  const Signal h0 = hermite(0, g);
  const double big_l = g.half_extent();
  // |cos(p pi/2)|^{1/p} evaluated from exact cosines.
  const std::array<std::pair<double, double>, 3> cases{{
      {4.0 / 3.0, std::pow(0.5, 0.75)},
      {1.5, std::pow(std::sqrt(0.5), 2.0 / 3.0)},
      {1.8, std::pow(std::sqrt((5.0 + std::sqrt(5.0)) / 8.0), 5.0 / 9.0)},
  }};
  bool pass = true;
  double worst_constant = 0.0;
  std::string verdicts;
  for (const auto& [p, oracle] : cases) {
    const double critical = gelfand_shilov_critical(p);
    worst_constant = std::max(worst_constant, std::abs(critical - oracle));
    const GelfandShilovResult sub = gelfand_shilov(h0, p, 1.0, 0.5 * critical, 0);
    // Puts the maximum of -pi x^2 + 2 pi a^p x^p / p at x = 3L, outside the box.
    const double a_fast = std::pow(3.0 * big_l, (2.0 - p) / p);
    const GelfandShilovResult over = gelfand_shilov(h0, p, a_fast, 0.5 * critical / a_fast, 0);
    pass = pass && sub.x_trace.verdict == Verdict::Convergent && sub.y_trace.verdict == Verdict::Convergent &&
           over.x_trace.verdict == Verdict::DivergentFast;
    verdicts += fmt(" p=%.4f:%c%c/%c", p, verdict_letter(sub.x_trace.verdict), verdict_letter(sub.y_trace.verdict),
                    verdict_letter(over.x_trace.verdict));
  }
  pass = pass && worst_constant < 1e-12;
  return {12, "gelfand-shilov", pass, fmt("critical_max_error=%.3e%s", worst_constant, verdicts.c_str())};
}

CriterionResult hardy() {
  bool cases_ok = true;
  for (int d : {1, 2}) {
    const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(d, d);
    cases_ok = cases_ok && hardy_case(i, i) == 2 && hardy_case(i, 2.0 * i) == 1 && hardy_case(i, 0.5 * i) == 3;
  }
  const Grid g = wide_grid();
  const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(1, 1);
  const HardyResult h0 = hardy_check(hermite(0, g), i1, i1, 0.0);
  const HardyResult h3_poly = hardy_check(hermite(3, g), i1, i1, 3.0);
  const HardyResult h3_flat = hardy_check(hermite(3, g), i1, i1, 0.0);
  const double c0 = std::pow(2.0, 0.25);
  const double c_error = std::max(std::abs(h0.c_f - c0), std::abs(h0.c_fhat - c0));
  const bool pass = cases_ok && h0.envelope_ok_f && h0.envelope_ok_fhat && c_error < 1e-6 && h0.hardy_case == 2 &&
                    h3_poly.envelope_ok_f && h3_poly.envelope_ok_fhat && !h3_flat.envelope_ok_f &&
                    !h3_flat.envelope_ok_fhat;
  return {13, "hardy", pass,
          fmt("cases=%s h0_C_error=%.3e h3_N3=%s/%s h3_N0=%s/%s", yes_no(cases_ok), c_error,
              yes_no(h3_poly.envelope_ok_f), yes_no(h3_poly.envelope_ok_fhat), yes_no(h3_flat.envelope_ok_f),
              yes_no(h3_flat.envelope_ok_fhat))};
}

CriterionResult detector() {
  const Grid g = detector_grid();
  std::mt19937_64 rng(1414);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::array<double, 10> a_values{0.5, 0.62, 0.75, 0.9, 1.0, 1.15, 1.3, 1.5, 1.75, 2.0};
  int recovered = 0;
  double worst_a = 0.0, worst_residual = 0.0;
  for (int c = 0; c < 20; ++c) {
    const int degree = c % 7;
    const double a = a_values[static_cast<std::size_t>((3 * c) % 10)];
    // P(x) e^{-pi a x^2} written as a superposition of h_k(sqrt(a) x).
    Polynomial poly(1, degree);
    const Eigen::MatrixXd scale = Eigen::MatrixXd::Constant(1, 1, std::sqrt(a));
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    for (int k = 0; k <= degree; ++k) {
      cplx coefficient(unit(rng), unit(rng));
      if (k == degree && std::abs(coefficient) < 0.3) coefficient *= 0.3 / std::abs(coefficient);
      Polynomial term = hermite_polynomial(k, 1, 0).compose_affine(scale, zero);
      term *= coefficient;
      poly += term;
    }
    const GaussHermiteSpec spec = GaussHermiteSpec::centered(poly, Eigen::MatrixXd::Constant(1, 1, a));
    const DetectionResult r = detect(sample_spec(spec, g));
    const double a_error = std::abs(r.a_est(0, 0) - a);
    if (r.is_gauss_hermite && r.degree_est == degree && a_error < 1e-3) ++recovered;
    worst_a = std::max(worst_a, a_error);
    worst_residual = std::max(worst_residual, r.residual);
  }

  const Grid dg = default_grid(1);
  std::array<std::vector<cplx>, 3> negatives;
  for (auto& n : negatives) n.resize(dg.size());
  for (std::size_t i = 0; i < dg.size(); ++i) {
    const double x = dg.point(i)[0];
    negatives[0][i] = std::exp(-std::abs(x));
    negatives[1][i] = 1.0 / (1.0 + x * x);
    negatives[2][i] = std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
  }
  int rejected = 0;
  double min_negative_residual = INFINITY;
  for (auto& n : negatives) {
    const DetectionResult r = detect(Signal(dg, std::move(n)));
    if (!r.is_gauss_hermite) ++rejected;
    min_negative_residual = std::min(min_negative_residual, r.residual);
  }
  return {14, "detector", recovered == 20 && rejected == 3,
          fmt("recovered=%d/20 max_a_error=%.3e max_residual=%.3e rejected=%d/3 min_negative_residual=%.3e",
              recovered, worst_a, worst_residual, rejected, min_negative_residual)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<CriterionResult(const AcceptanceOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "moyal", [](const AcceptanceOptions&) { return moyal(); }},
      {2, "gaussian-ambiguity", [](const AcceptanceOptions&) { return gaussian_ambiguity(); }},
      {3, "heisenberg-fourier", [](const AcceptanceOptions&) { return heisenberg_fourier_sharp(); }},
      {4, "heisenberg-ambiguity",
       [](const AcceptanceOptions& o) { return heisenberg_ambiguity_sharp(o.mutate_ambiguity_bound); }},
      {5, "covariance", [](const AcceptanceOptions& o) { return covariance(o.mutate_ambiguity_bound); }},
      {6, "lem0", [](const AcceptanceOptions&) { return lem0(); }},
      {7, "fouramb", [](const AcceptanceOptions&) { return fouramb(); }},
      {8, "wigner", [](const AcceptanceOptions&) { return wigner_relation(); }},
      {9, "bh-dichotomy", [](const AcceptanceOptions&) { return bh_dichotomy(); }},
      {10, "divergence-exponents", [](const AcceptanceOptions&) { return divergence_exponents(); }},
      {11, "cowling-price", [](const AcceptanceOptions&) { return cowling_price_check(); }},
      {12, "gelfand-shilov", [](const AcceptanceOptions&) { return gelfand_shilov_check(); }},
      {13, "hardy", [](const AcceptanceOptions&) { return hardy(); }},
      {14, "detector", [](const AcceptanceOptions&) { return detector(); }},
  };
  return all;
}

constexpr int kDeterminismId = 15;
constexpr const char* kDeterminismName = "determinism";

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool selected(int id, const std::string& name, const std::string& filter) {
  if (filter.empty()) return true;
  const std::string f = lower(filter);
  return f == std::to_string(id) || name.find(f) != std::string::npos;
}

CriterionResult run_guarded(const Criterion& c, const AcceptanceOptions& options) {
  try {
    return c.run(options);
  } catch (const Error& e) {
    return {c.id, c.name, false, fmt("error code=%s message=\"%s\"", e.code(), e.what())};
  }
}

std::vector<CriterionResult> run_suite(const std::vector<const Criterion*>& list, const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const Criterion* c : list) out.push_back(run_guarded(*c, options));
  return out;
}

}  // namespace

bool AcceptanceReport::all_pass() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::string AcceptanceReport::text() const {
  std::string out;
  int passed = 0;
  for (const auto& r : results) {
    out += fmt("%2d %-21s %s ", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL") + r.detail + "\n";
    passed += r.pass ? 1 : 0;
  }
  out += fmt("passed %d/%zu\n", passed, results.size());
  return out;
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : criteria()) n.emplace_back(c.name);
    n.emplace_back(kDeterminismName);
    return n;
  }();
  return names;
}

AcceptanceReport verify_all(const AcceptanceOptions& options) {
  std::vector<const Criterion*> list;
  for (const auto& c : criteria())
    if (selected(c.id, c.name, options.filter)) list.push_back(&c);

  AcceptanceReport report;
  report.results = run_suite(list, options);

  if (selected(kDeterminismId, kDeterminismName, options.filter)) {
    std::vector<const Criterion*> replay = list;
    std::vector<CriterionResult> first = report.results;
    if (replay.empty()) {
      for (const auto& c : criteria()) replay.push_back(&c);
      first = run_suite(replay, options);
    }
    const std::string a = AcceptanceReport{first}.text();
    const std::string b = AcceptanceReport{run_suite(replay, options)}.text();
    report.results.push_back({kDeterminismId, kDeterminismName, a == b,
                              fmt("runs=2 criteria=%zu bytes=%zu identical=%s", replay.size(), a.size(),
                                  yes_no(a == b))});
  }
  return report;
}

}  // namespace tfu
