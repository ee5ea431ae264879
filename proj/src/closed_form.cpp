#include "tfu/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tfu/errors.hpp"
#include "tfu/grid.hpp"

namespace tfu {
namespace {

Eigen::VectorXd as_vector(std::span<const double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

GaussianTerm term_fourier(const GaussianTerm& f) {
  const int d = f.dim();
  const Eigen::MatrixXcd minv = f.quad.inverse();
  const Eigen::VectorXcd m = minv * f.lin;
  const cplx i(0.0, 1.0);

  GaussianTerm out;
  out.quad = minv;
  out.lin = -i * m;
  out.offset = f.offset + kPi * (f.lin.transpose() * minv * f.lin)(0, 0) - half_log_det(f.quad);

  // d/dy_j of the new exponent, as linear polynomials.
  std::vector<Polynomial> grad_phi;
  for (int j = 0; j < d; ++j) {
    Polynomial g = Polynomial::constant(d, 2.0 * kPi * out.lin(j));
    for (int k = 0; k < d; ++k) g += Polynomial::variable(d, k) * (-2.0 * kPi * minv(j, k));
    grad_phi.push_back(std::move(g));
  }
  // x^alpha f  <->  (i/2pi)^|alpha| d^alpha fhat; build Q_alpha by raising one axis at a time.
  const cplx step = i / (2.0 * kPi);
  std::map<MultiIndex, Polynomial> q;
  q.emplace(MultiIndex{0, 0}, Polynomial::constant(d, 1.0));
  auto q_for = [&](MultiIndex alpha) -> const Polynomial& {
    // Memoised recursion: raise axis 0 first, then axis 1.
    std::vector<MultiIndex> chain;
    MultiIndex cur = alpha;
    while (!q.count(cur)) {
      chain.push_back(cur);
      if (cur[1] > 0) --cur[1]; else --cur[0];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      MultiIndex prev = *it;
      const int axis = (prev[1] > 0) ? 1 : 0;
      --prev[static_cast<std::size_t>(axis)];
      const Polynomial& base = q.at(prev);
      Polynomial next = base.derivative(axis) + base * grad_phi[static_cast<std::size_t>(axis)];
      next *= step;
      q.emplace(*it, std::move(next));
    }
    return q.at(alpha);
  };
  Polynomial poly(d, 0);
  f.poly.for_each_term([&](MultiIndex alpha, cplx c) { poly += q_for(alpha) * c; });
  poly.trim();
  out.poly = std::move(poly);
  return out;
}

}  // namespace

cplx GaussianTerm::exponent(std::span<const double> t) const {
  const int d = dim();
  cplx e = offset;
  for (int j = 0; j < d; ++j) {
    e += 2.0 * kPi * lin(j) * t[static_cast<std::size_t>(j)];
    for (int k = 0; k < d; ++k)
      e -= kPi * quad(j, k) * t[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k)];
  }
  return e;
}

cplx GaussianTerm::operator()(std::span<const double> t) const {
  return poly(t) * std::exp(exponent(t));
}

double GaussianTerm::log_abs(std::span<const double> t) const {
  const double p = std::abs(poly(t));
  if (p == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(p) + exponent(t).real();
}

ClosedForm::ClosedForm(int dim) : dim_(dim) {}

ClosedForm::ClosedForm(GaussianTerm term) : dim_(term.dim()) {
  require(term.quad.rows() == dim_ && term.quad.cols() == dim_ && term.lin.size() == dim_,
          "closed form: term shape mismatch");
  terms_.push_back(std::move(term));
}

cplx ClosedForm::operator()(std::span<const double> t) const {
  cplx s{};
  for (const auto& term : terms_) s += term(t);
  return s;
}

double ClosedForm::log_abs(std::span<const double> t) const {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (terms_.empty()) return kNegInf;
  if (terms_.size() == 1) return terms_[0].log_abs(t);
  // Complex log-sum-exp over terms.
  std::vector<cplx> logs;
  logs.reserve(terms_.size());
  double top = kNegInf;
  for (const auto& term : terms_) {
    const cplx p = term.poly(t);
    if (p == cplx{}) continue;
    const cplx l = std::log(p) + term.exponent(t);
    logs.push_back(l);
    top = std::max(top, l.real());
  }
  if (logs.empty()) return kNegInf;
  cplx s{};
  for (const cplx& l : logs) s += std::exp(l - top);
  const double m = std::abs(s);
  return m == 0.0 ? kNegInf : std::log(m) + top;
}

ClosedForm ClosedForm::scaled(cplx factor) const {
  ClosedForm out(dim_);
  if (factor == cplx{}) return out;
  out.terms_ = terms_;
  const cplx l = std::log(factor);
  for (auto& t : out.terms_) t.offset += l;
  return out;
}

ClosedForm ClosedForm::conjugate() const {
  ClosedForm out = *this;
  for (auto& t : out.terms_) {
    t.poly = t.poly.conjugate();
    t.quad = t.quad.conjugate();
    t.lin = t.lin.conjugate();
    t.offset = std::conj(t.offset);
  }
  return out;
}

ClosedForm ClosedForm::translated(std::span<const double> shift) const {
  const Eigen::VectorXd a = as_vector(shift);
  const Eigen::VectorXcd ac = a.cast<cplx>();
  ClosedForm out = *this;
  for (auto& t : out.terms_) {
    t.poly = t.poly.compose_affine(Eigen::MatrixXd::Identity(dim_, dim_), -a);
    const Eigen::VectorXcd ma = t.quad * ac;
    t.offset += -kPi * (ac.transpose() * ma)(0, 0) - 2.0 * kPi * (t.lin.transpose() * ac)(0, 0);
    t.lin = t.lin + ma;
  }
  return out;
}

ClosedForm ClosedForm::modulated(std::span<const double> omega) const {
  const Eigen::VectorXd w = as_vector(omega);
  ClosedForm out = *this;
  for (auto& t : out.terms_) t.lin += cplx(0.0, 1.0) * w.cast<cplx>();
  return out;
}

ClosedForm ClosedForm::dilated(double lambda) const {
  require(lambda > 0.0, "closed form: dilation must be positive");
  ClosedForm out = *this;
  for (auto& t : out.terms_) {
    t.poly = t.poly.compose_affine(lambda * Eigen::MatrixXd::Identity(dim_, dim_),
                                   Eigen::VectorXd::Zero(dim_));
    t.quad *= lambda * lambda;
    t.lin *= lambda;
    t.offset += 0.5 * dim_ * std::log(lambda);
  }
  return out;
}

ClosedForm ClosedForm::reflected() const {
  ClosedForm out = *this;
  for (auto& t : out.terms_) {
    t.poly = t.poly.compose_affine(-Eigen::MatrixXd::Identity(dim_, dim_),
                                   Eigen::VectorXd::Zero(dim_));
    t.lin = -t.lin;
  }
  return out;
}

ClosedForm ClosedForm::fourier() const {
  ClosedForm out(dim_);
  for (const auto& t : terms_) out.terms_.push_back(term_fourier(t));
  return out;
}

ClosedForm ClosedForm::inverse_fourier() const { return fourier().reflected(); }

ClosedForm& ClosedForm::operator+=(const ClosedForm& other) {
  require(dim_ == other.dim_, "closed form: dimension mismatch");
  for (const auto& t : other.terms_) {
    auto same = std::find_if(terms_.begin(), terms_.end(), [&](const GaussianTerm& s) {
      return s.offset == t.offset && s.quad == t.quad && s.lin == t.lin;
    });
    if (same != terms_.end())
      same->poly += t.poly;
    else
      terms_.push_back(t);
  }
  return *this;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  require(a.dim_ == b.dim_, "closed form: dimension mismatch");
  ClosedForm out(a.dim_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      GaussianTerm p;
      p.poly = s.poly * t.poly;
      p.quad = s.quad + t.quad;
      p.lin = s.lin + t.lin;
      p.offset = s.offset + t.offset;
      out.terms_.push_back(std::move(p));
    }
  }
  return out;
}

ClosedForm gaussian_closed_form(const Eigen::MatrixXd& a) {
  const int d = static_cast<int>(a.rows());
  GaussianTerm t;
  t.poly = Polynomial::constant(d, 1.0);
  t.quad = a.cast<cplx>();
  t.lin = Eigen::VectorXcd::Zero(d);
  return ClosedForm(std::move(t));
}

ClosedForm ambiguity_slice(const ClosedForm& u, const ClosedForm& v, std::span<const double> x) {
  std::array<double, 2> half{}, neg_half{};
  for (std::size_t j = 0; j < x.size(); ++j) {
    half[j] = 0.5 * x[j];
    neg_half[j] = -0.5 * x[j];
  }
  const std::span<const double> plus(half.data(), x.size());
  const std::span<const double> minus(neg_half.data(), x.size());
  // h_x(t) = u(t + x/2) conj(v(t - x/2))
  const ClosedForm h = u.translated(minus) * v.translated(plus).conjugate();
  return h.fourier();
}

cplx half_log_det(const Eigen::MatrixXcd& m) {
  if (m.rows() == 1) return 0.5 * std::log(m(0, 0));
  const cplx tr = m(0, 0) + m(1, 1);
  const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const cplx disc = std::sqrt(tr * tr / 4.0 - det);
  const cplx l1 = tr / 2.0 + disc;
  const cplx l2 = tr / 2.0 - disc;
  return 0.5 * (std::log(l1) + std::log(l2));
}

}  // namespace tfu
