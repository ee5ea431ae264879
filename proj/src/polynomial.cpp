#include "tfu/polynomial.hpp"

#include <algorithm>

#include "tfu/errors.hpp"

namespace tfu {

Polynomial::Polynomial(int dim, int degree_bound) : dim_(dim), bound_(std::max(0, degree_bound)) {
  require(dim == 1 || dim == 2, "polynomial: dimension must be 1 or 2");
  const std::size_t side = static_cast<std::size_t>(bound_ + 1);
  coeffs_.assign(dim == 1 ? side : side * side, cplx{});
}

Polynomial Polynomial::constant(int dim, cplx value) {
  Polynomial p(dim, 0);
  p.coeffs_[0] = value;
  return p;
}

Polynomial Polynomial::variable(int dim, int axis) {
  require(axis >= 0 && axis < dim, "polynomial: axis out of range");
  Polynomial p(dim, 1);
  MultiIndex alpha{0, 0};
  alpha[static_cast<std::size_t>(axis)] = 1;
  p.set_coefficient(alpha, 1.0);
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for_each_term([&](MultiIndex a, cplx) { deg = std::max(deg, a[0] + a[1]); });
  return deg;
}

cplx Polynomial::coefficient(MultiIndex alpha) const {
  if (dim_ == 1 && alpha[1] != 0) return {};
  if (alpha[0] < 0 || alpha[1] < 0 || alpha[0] + alpha[1] > bound_) return {};
  return coeffs_[slot(alpha)];
}

void Polynomial::set_coefficient(MultiIndex alpha, cplx value) {
  require(alpha[0] >= 0 && alpha[1] >= 0, "polynomial: negative exponent");
  require(dim_ == 2 || alpha[1] == 0, "polynomial: second exponent on a 1-d polynomial");
  if (alpha[0] + alpha[1] > bound_) grow(alpha[0] + alpha[1]);
  coeffs_[slot(alpha)] = value;
}

void Polynomial::grow(int bound) {
  if (bound <= bound_) return;
  Polynomial bigger(dim_, bound);
  for_each_term([&](MultiIndex a, cplx c) { bigger.coeffs_[bigger.slot(a)] = c; });
  *this = std::move(bigger);
}

void Polynomial::trim() {
  const int deg = std::max(0, total_degree());
  if (deg == bound_) return;
  Polynomial smaller(dim_, deg);
  for_each_term([&](MultiIndex a, cplx c) { smaller.coeffs_[smaller.slot(a)] = c; });
  *this = std::move(smaller);
}

cplx Polynomial::operator()(double x) const {
  require(dim_ == 1, "polynomial: scalar evaluation of a 2-d polynomial");
  cplx acc{};
  for (int k = bound_; k >= 0; --k) acc = acc * x + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

cplx Polynomial::operator()(std::span<const double> x) const {
  if (dim_ == 1) return (*this)(x[0]);
  // Horner in x0 over inner Horner polynomials in x1.
  cplx outer{};
  for (int i = bound_; i >= 0; --i) {
    cplx inner{};
    for (int j = bound_ - i; j >= 0; --j) inner = inner * x[1] + coeffs_[slot({i, j})];
    outer = outer * x[0] + inner;
  }
  return outer;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial d(dim_, std::max(0, bound_ - 1));
  for_each_term([&](MultiIndex a, cplx c) {
    const int e = a[static_cast<std::size_t>(axis)];
    if (e == 0) return;
    MultiIndex b = a;
    b[static_cast<std::size_t>(axis)] -= 1;
    d.coeffs_[d.slot(b)] += c * static_cast<double>(e);
  });
  return d;
}

Polynomial Polynomial::conjugate() const {
  Polynomial c = *this;
  for (auto& v : c.coeffs_) v = std::conj(v);
  return c;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require(dim_ == other.dim_, "polynomial: dimension mismatch");
  grow(other.bound_);
  other.for_each_term([&](MultiIndex a, cplx c) { coeffs_[slot(a)] += c; });
  return *this;
}

Polynomial& Polynomial::operator*=(cplx scalar) {
  for (auto& v : coeffs_) v *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.dim_ == b.dim_, "polynomial: dimension mismatch");
  Polynomial out(a.dim_, a.bound_ + b.bound_);
  a.for_each_term([&](MultiIndex x, cplx cx) {
    b.for_each_term([&](MultiIndex y, cplx cy) {
      out.coeffs_[out.slot({x[0] + y[0], x[1] + y[1]})] += cx * cy;
    });
  });
  out.trim();
  return out;
}

Polynomial Polynomial::compose_affine(const Eigen::MatrixXd& c, const Eigen::VectorXd& s) const {
  require(c.rows() == dim_ && c.cols() == dim_ && s.size() == dim_,
          "polynomial: affine map has wrong shape");
  // Linear forms l_j(x) = sum_k c_jk x_k + s_j and their powers.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) {
    Polynomial l = Polynomial::constant(dim_, s(j));
    for (int k = 0; k < dim_; ++k) l += Polynomial::variable(dim_, k) * cplx(c(j, k));
    auto& pw = powers[static_cast<std::size_t>(j)];
    pw.push_back(Polynomial::constant(dim_, 1.0));
    for (int e = 1; e <= bound_; ++e) pw.push_back(pw.back() * l);
  }
  Polynomial out(dim_, 0);
  for_each_term([&](MultiIndex a, cplx coef) {
    Polynomial term = powers[0][static_cast<std::size_t>(a[0])];
    if (dim_ == 2) term = term * powers[1][static_cast<std::size_t>(a[1])];
    out += term * coef;
  });
  out.trim();
  return out;
}

}  // namespace tfu
