#pragma once

#include <map>
#include <optional>

#include <Eigen/Dense>

#include "tfu/functional.hpp"
#include "tfu/signal.hpp"
#include "tfu/uncertainty.hpp"

namespace tfu {

inline constexpr double kDetectResidualThreshold = 1e-4;
inline constexpr int kDetectMaxDegree = 10;

struct DetectionResult {
  bool is_gauss_hermite = false;
  Eigen::MatrixXd a_est;
  /// Smallest degree whose fit met the residual threshold, or the degree with
  /// the smallest residual when none did.
  int degree_est = 0;
  /// Relative L² misfit ‖f - Pf‖/‖f‖ of the projection onto the A_est-adapted
  /// Hermite functions of order <= degree_est.
  double residual = 0.0;
  /// Beurling–Hörmander verdicts for N in {d, 2m+d, 2m+d+2}, m = degree_est.
  std::map<double, Verdict> bh_verdicts;
  /// Verdicts match "divergent, divergent, convergent".
  bool bh_consistent = false;
  /// A functional overflowed; its verdict is recorded as divergent-fast.
  bool bh_overflow = false;
  /// Quadratic phase B in exp(-i pi <B x, x>) (Gaussian chirp), estimated
  /// only when the signal is not accepted.
  bool chirp_detected = false;
  Eigen::MatrixXd chirp_est;
  std::size_t fit_points = 0;
  /// Initial estimate from the log-quadratic fit, before refinement.
  Eigen::MatrixXd a_initial;
};

/// Tests whether f has the form P(x) exp(-pi <A x, x>) and estimates A, deg P.
DetectionResult detect(const Signal& f);

struct EqualityProbe {
  bool is_equality_pair = false;
  CovarianceReport evidence;
  /// Present when the covariance gap vanished: detection on u and v after
  /// removing their mean position and frequency.
  std::optional<DetectionResult> detect_u;
  std::optional<DetectionResult> detect_v;
};

EqualityProbe equality_case_probe(const Signal& u, const Signal& v);

/// Removes the mean frequency and mean position of |s|^2 and |s^|^2.
Signal center_time_frequency(const Signal& s);

}  // namespace tfu
