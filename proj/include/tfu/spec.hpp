#pragma once

#include <string>

#include <Eigen/Dense>
#include "json.hpp"

#include "tfu/closed_form.hpp"
#include "tfu/signal.hpp"

namespace tfu {

/// Exact description of
///   P(x) exp(2 i pi <w, x>) exp(-pi <A(x - a), x - a> - i pi <B x, x>)
/// used as ground truth for tests and the `gen` command.
class GaussHermiteSpec {
 public:
  /// Checks A symmetric positive definite and B symmetric.
  GaussHermiteSpec(Polynomial poly, Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::VectorXd center,
                   Eigen::VectorXd modulation);

  /// P(x) exp(-pi <A x, x>) with B = 0, a = w = 0.
  static GaussHermiteSpec centered(Polynomial poly, Eigen::MatrixXd a);

  int dim() const { return poly_.dim(); }
  const Polynomial& poly() const { return poly_; }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }
  const Eigen::VectorXd& center() const { return center_; }
  const Eigen::VectorXd& modulation() const { return modulation_; }

  ClosedForm closed_form() const;

  nlohmann::json to_json() const;
  /// Fields: dim, A, B (optional), center (optional), modulation (optional),
  /// poly: list of {"alpha": [..], "re": x, "im": y}.
  static GaussHermiteSpec from_json(const nlohmann::json& j);

 private:
  Polynomial poly_;
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
  Eigen::VectorXd center_;
  Eigen::VectorXd modulation_;
};

/// Pointwise evaluation on the grid; the result carries the closed form.
Signal sample_spec(const GaussHermiteSpec& spec, const Grid& grid);

}  // namespace tfu
