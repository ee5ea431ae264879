#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tfu/polynomial.hpp"

namespace tfu {

/// One polynomial-times-complex-Gaussian term
///   f(t) = P(t) exp(-pi t^T M t + 2 pi b^T t + c)
/// with M complex symmetric and Re M positive definite.
struct GaussianTerm {
  Polynomial poly;
  Eigen::MatrixXcd quad;
  Eigen::VectorXcd lin;
  cplx offset{};

  int dim() const { return poly.dim(); }
  cplx exponent(std::span<const double> t) const;
  cplx operator()(std::span<const double> t) const;
  /// log|f(t)|, -infinity where P vanishes.
  double log_abs(std::span<const double> t) const;
};

/// Finite sum of GaussianTerm values. This is the exact form carried by
/// generated signals; every elementary operator and the Fourier and
/// ambiguity transforms map it to another closed form, which lets the
/// tail-sensitive functionals evaluate far beyond the FFT noise floor.
class ClosedForm {
 public:
  explicit ClosedForm(int dim);
  explicit ClosedForm(GaussianTerm term);

  int dim() const { return dim_; }
  const std::vector<GaussianTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  cplx operator()(std::span<const double> t) const;
  double log_abs(std::span<const double> t) const;

  ClosedForm scaled(cplx factor) const;
  ClosedForm conjugate() const;
  /// t -> f(t - shift)
  ClosedForm translated(std::span<const double> shift) const;
  /// t -> exp(2 i pi <omega, t>) f(t)
  ClosedForm modulated(std::span<const double> omega) const;
  /// t -> lambda^{d/2} f(lambda t)
  ClosedForm dilated(double lambda) const;
  /// t -> f(-t)
  ClosedForm reflected() const;
  /// y -> integral f(t) exp(-2 i pi <t, y>) dt
  ClosedForm fourier() const;
  ClosedForm inverse_fourier() const;

  ClosedForm& operator+=(const ClosedForm& other);
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  /// Pointwise product.
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

 private:
  int dim_;
  std::vector<GaussianTerm> terms_;
};

/// The centered Gaussian exp(-pi <A t, t>) with real symmetric A.
ClosedForm gaussian_closed_form(const Eigen::MatrixXd& a);

/// y -> A(u,v)(x,y) = integral u(t+x/2) conj(v(t-x/2)) exp(-2 i pi <y,t>) dt
ClosedForm ambiguity_slice(const ClosedForm& u, const ClosedForm& v, std::span<const double> x);

/// Principal 1/2 log det M for complex symmetric M with positive definite real part.
cplx half_log_det(const Eigen::MatrixXcd& m);

}  // namespace tfu
