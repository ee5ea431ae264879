#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tfu {

using cplx = std::complex<double>;
using MultiIndex = std::array<int, 2>;

/// Polynomial in d <= 2 real variables with complex coefficients, stored
/// densely over multi-indices of total degree <= degree_bound().
class Polynomial {
 public:
  explicit Polynomial(int dim = 1, int degree_bound = 0);

  static Polynomial constant(int dim, cplx value);
  /// The coordinate function x_axis.
  static Polynomial variable(int dim, int axis);

  int dim() const { return dim_; }
  int degree_bound() const { return bound_; }
  /// Highest total degree carrying a nonzero coefficient; -1 for the zero polynomial.
  int total_degree() const;
  bool is_zero() const { return total_degree() < 0; }

  cplx coefficient(MultiIndex alpha) const;
  void set_coefficient(MultiIndex alpha, cplx value);

  cplx operator()(std::span<const double> x) const;
  cplx operator()(double x) const;

  Polynomial derivative(int axis) const;
  Polynomial conjugate() const;
  /// P(C x + s) for a real d x d matrix C and real shift s.
  Polynomial compose_affine(const Eigen::MatrixXd& c, const Eigen::VectorXd& s) const;

  /// Visits every nonzero coefficient as (alpha, coefficient) in increasing
  /// total degree.
  template <typename F>
  void for_each_term(F&& f) const {
    for (int total = 0; total <= bound_; ++total) {
      if (dim_ == 1) {
        const cplx c = coeffs_[static_cast<std::size_t>(total)];
        if (c != cplx{}) f(MultiIndex{total, 0}, c);
      } else {
        for (int i = total; i >= 0; --i) {
          const cplx c = coeffs_[slot({i, total - i})];
          if (c != cplx{}) f(MultiIndex{i, total - i}, c);
        }
      }
    }
  }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(cplx scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Drops the storage bound to the actual degree.
  void trim();

 private:
  std::size_t slot(MultiIndex alpha) const {
    return dim_ == 1 ? static_cast<std::size_t>(alpha[0])
                     : static_cast<std::size_t>(alpha[0]) * (bound_ + 1) + alpha[1];
  }
  void grow(int bound);

  int dim_;
  int bound_;
  std::vector<cplx> coeffs_;
};

}  // namespace tfu
