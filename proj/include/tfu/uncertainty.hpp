#pragma once

#include <optional>

#include <Eigen/Dense>

#include "tfu/functional.hpp"
#include "tfu/signal.hpp"

namespace tfu {

struct HeisenbergReport {
  double factor1 = 0.0;
  double factor2 = 0.0;
  double product = 0.0;
  double bound = 0.0;
  /// product / bound; at least 1 up to discretization error.
  double ratio = 0.0;
  int direction = 0;
  double center_a = 0.0;
  double center_b = 0.0;
};

/// factor1 = ∫(x_i - a)^2 |f|^2, factor2 = ∫(y_i - b)^2 |f^|^2,
/// bound = ‖f‖^4 / (16 pi^2). Omitted centers default to the means.
HeisenbergReport heisenberg_fourier(const Signal& f, int axis, std::optional<double> a = std::nullopt,
                                    std::optional<double> b = std::nullopt);

/// Factors ∫∫(x_i - a)^2 |A(u,v)|^2 and ∫∫(y_i - b)^2 |A(u,v)|^2 over the
/// surface lattice, bound = ‖u‖^4 ‖v‖^4 / (4 pi^2).
HeisenbergReport heisenberg_ambiguity(const Signal& u, const Signal& v, int axis,
                                      std::optional<double> a = std::nullopt,
                                      std::optional<double> b = std::nullopt);

struct CovarianceReport {
  int dim = 1;
  Eigen::VectorXd mean_x;
  Eigen::VectorXd mean_y;
  Eigen::MatrixXd v_x;
  Eigen::MatrixXd v_y;
  Eigen::MatrixXd cross_cov;
  /// 4 pi^2 V_X - V_Y^{-1}
  Eigen::MatrixXd gap_matrix;
  Eigen::VectorXd gap_eigenvalues;
  double min_eigenvalue = 0.0;
  double det_product = 0.0;
  /// (4 pi^2)^{-2d}
  double det_bound = 0.0;
  /// (4 pi^2)^{-d}, attained by Gaussian pairs.
  double det_bound_sharp = 0.0;
  /// ∫∫|x - mean_x|^2 |A|^2 and ∫∫|y - mean_y|^2 |A|^2 (unnormalized).
  double trace_x = 0.0;
  double trace_y = 0.0;
  double trace_product = 0.0;
  /// d^2 ‖u‖^4 ‖v‖^4 / (4 pi^2)
  double trace_bound = 0.0;
  /// ∫∫|A|^2 before normalization, and (‖u‖‖v‖)^2.
  double total_mass = 0.0;
  double norm_product_sq = 0.0;
  bool correlated = false;
  bool semidefinite = false;
  bool equality_case = false;
};

/// Moments of the probability density |A(u,v)|^2 / ∫∫|A(u,v)|^2. Throws
/// NumericalError when V_Y is numerically singular.
CovarianceReport covariance_report(const Signal& u, const Signal& v);

}  // namespace tfu
