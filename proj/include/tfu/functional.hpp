#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tfu/signal.hpp"

namespace tfu {

enum class Verdict { Convergent, DivergentPolynomial, DivergentFast };

const char* to_string(Verdict v);
inline bool is_divergent(Verdict v) { return v != Verdict::Convergent; }

/// Truncated integrals I(R) of a nonnegative integrand for increasing R.
struct FunctionalTrace {
  std::vector<double> radii;
  std::vector<double> values;
  /// log I(R); -infinity where I(R) = 0.
  std::vector<double> log_values;
  /// Least-squares slope of log I against log R over the top half of radii.
  double growth_exponent = 0.0;
  Verdict verdict = Verdict::Convergent;
};

inline constexpr double kConvergenceThreshold = 0.05;
inline constexpr double kFastSlopeRatio = 1.15;

/// Growth exponent and verdict from (radii, log I): convergent below
/// kConvergenceThreshold; divergent-fast when the last local log-log slope of
/// the top half exceeds 2 and kFastSlopeRatio times its first local slope.
void classify(FunctionalTrace& t);

/// Radii list validation: nonempty, positive, strictly increasing, not past
/// `limit`. An empty input yields default_radii(limit).
std::vector<double> resolve_radii(std::span<const double> radii, double limit);

/// Beurling–Hörmander functional
///   sum over max(|x|,|y|) <= R of |f(x)| |f^(y)| exp(2 pi |<x,y>|) / (1 + |x| + |y|)^N.
/// Uses the exact closed form of f when attached (y on the signal lattice),
/// otherwise FFT samples of f^ on the dual lattice.
FunctionalTrace bh_functional(const Signal& f, double n_exp, std::span<const double> radii = {});

/// As bh_functional with weight (1 + |x|)^{-N/2} (1 + |y|)^{-N/2}.
FunctionalTrace bh_functional_split(const Signal& f, double n_exp, std::span<const double> radii = {});

struct CowlingPriceResult {
  FunctionalTrace f_trace;     // |f| exp(pi a x_j^2) / (1 + |x_j|)^N
  FunctionalTrace fhat_trace;  // |f^| exp(pi b y_j^2) / (1 + |y_j|)^N
  double ab = 0.0;
  /// Both integrals can be finite for a nonzero f only when ab <= 1.
  bool both_finite_allowed = false;
  bool both_convergent = false;
};

CowlingPriceResult cowling_price(const Signal& f, double a, double b, double n_exp, int axis,
                                 std::span<const double> radii = {});

/// |cos(p pi / 2)|^{1/p}.
double gelfand_shilov_critical(double p);

struct GelfandShilovResult {
  FunctionalTrace x_trace;  // |f| exp(2 pi a^p |x_j|^p / p)
  FunctionalTrace y_trace;  // |f^| exp(2 pi b^q |y_j|^q / q)
  double p = 0.0;
  double q = 0.0;
  double critical = 0.0;
  double ab = 0.0;
  /// "subcritical", "supercritical" or "critical" (within 1e-9 relative).
  std::string regime;
};

GelfandShilovResult gelfand_shilov(const Signal& f, double p, double a, double b, int axis,
                                   std::span<const double> radii = {});

struct HardyResult {
  bool envelope_ok_f = false;
  bool envelope_ok_fhat = false;
  double c_f = 0.0;
  double c_fhat = 0.0;
  /// Log-log slope of the running maximum of the envelope ratio (top half of radii).
  double envelope_slope_f = 0.0;
  double envelope_slope_fhat = 0.0;
  /// 1: B - A^{-1} semidefinite and nonzero; 2: B = A^{-1}; 3: otherwise.
  int hardy_case = 3;
};

/// Envelope check against C (1 + |x|)^N exp(-pi <A x, x>) for f and
/// C (1 + |y|)^N exp(-pi <B y, y>) for f^.
HardyResult hardy_check(const Signal& f, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double n_exp,
                        std::span<const double> radii = {});

/// Case classification of (A, B) alone.
int hardy_case(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct HbaResult {
  FunctionalTrace joint;       // |A|^2 exp(pi (|x|^2 + |y|^2)) / (1 + |x| + |y|)^N
  FunctionalTrace marginal_x;  // |A|^2 exp(pi |x|^2) / (1 + |x|)^N
  FunctionalTrace marginal_y;  // |A|^2 exp(pi |y|^2) / (1 + |y|)^N
};

/// Functionals of the ambiguity surface A(u,v). With closed forms on both
/// inputs the y-lattice is the signal lattice and |A| is exact; otherwise
/// FFT rows on the dual lattice.
HbaResult hba_functionals(const Signal& u, const Signal& v, double n_exp, std::span<const double> radii = {});

struct GelfandShilovAmbiguityResult {
  FunctionalTrace x_trace;  // |A|^2 exp(2 pi a^p |x_j|^p / p)
  FunctionalTrace y_trace;  // |A|^2 exp(2 pi b^q |y_j|^q / q)
  double p = 0.0;
  double q = 0.0;
  double critical = 0.0;
  double ab = 0.0;
  std::string regime;
};

GelfandShilovAmbiguityResult gelfand_shilov_ambiguity(const Signal& u, const Signal& v, double p, double a,
                                                      double b, int axis, std::span<const double> radii = {});

}  // namespace tfu
