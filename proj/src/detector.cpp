#include "tfu/detector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>

#include <boost/math/tools/minima.hpp>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/hermite.hpp"
#include "tfu/operators.hpp"
#include "tfu/parallel.hpp"
#include "tfu/quadrature.hpp"

namespace tfu {
namespace {

constexpr std::size_t kMinFitPoints = 50;
constexpr double kRegionFraction = 1e-6;
constexpr double kChirpThreshold = 1e-3;

Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd clamp_spd(const Eigen::MatrixXd& a, double lo, double hi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(lo).cwiseMin(hi);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// Relative misfit of f against its projection onto
// {det(A)^{1/4} h_alpha(A^{1/2} x) : |alpha| <= m}.
class ProjectionResidual {
 public:
  explicit ProjectionResidual(const Signal& f) : f_(f), norm_sq_(std::pow(l2_norm(f), 2)) {}

  double operator()(const Eigen::MatrixXd& a, int m) const {
    const Grid& g = f_.grid();
    const int d = g.dim();
    const std::size_t size = g.size();
    const Eigen::MatrixXd s = sym_sqrt(a);
    const double scale = std::pow(a.determinant(), 0.25);
    // Per-point 1-d Hermite tables along the rotated coordinates.
    std::vector<std::vector<double>> z_tables(static_cast<std::size_t>(d), std::vector<double>(size * (m + 1)));
    for (std::size_t i = 0; i < size; ++i) {
      const auto p = g.point(i);
      for (int j = 0; j < d; ++j) {
        double z = 0.0;
        for (int k = 0; k < d; ++k) z += s(j, k) * p[static_cast<std::size_t>(k)];
        const auto h = hermite_values(m, z);
        std::copy(h.begin(), h.end(), z_tables[static_cast<std::size_t>(j)].begin() + static_cast<std::ptrdiff_t>(i * (m + 1)));
      }
    }
    const double cell = g.cell_volume();
    std::vector<cplx> fitted(size);
    std::vector<double> basis(size);
    std::vector<cplx> terms(size);
    const auto mm = static_cast<std::size_t>(m + 1);
    auto add_basis = [&](int a0, int a1) {
      for (std::size_t i = 0; i < size; ++i) {
        double b = scale * z_tables[0][i * mm + static_cast<std::size_t>(a0)];
        if (d == 2) b *= z_tables[1][i * mm + static_cast<std::size_t>(a1)];
        basis[i] = b;
        terms[i] = f_[i] * b;
      }
      const cplx c = cell * pairwise_sum(terms);
      for (std::size_t i = 0; i < size; ++i) fitted[i] += c * basis[i];
    };
    for (int total = 0; total <= m; ++total) {
      if (d == 1)
        add_basis(total, 0);
      else
        for (int a0 = total; a0 >= 0; --a0) add_basis(a0, total - a0);
    }
    std::vector<double> r(size);
    for (std::size_t i = 0; i < size; ++i) r[i] = std::norm(f_[i] - fitted[i]);
    return std::sqrt(cell * pairwise_sum(r) / norm_sq_);
  }

 private:
  const Signal& f_;
  double norm_sq_;
};

struct Fit {
  Eigen::MatrixXd a;
  double residual;
};

// Scans log A over [min(starts) - 1.5, max(starts) + 1.5] with step <= 0.075,
// then polishes the best bracket with Brent's method.
Fit refine_1d(const ProjectionResidual& res, double a_lo, double a_hi, int m) {
  constexpr double kHalfWidth = 1.5;
  constexpr double kMaxStep = 0.075;
  const double t_lo = std::log(std::min(a_lo, a_hi)) - kHalfWidth;
  const double t_hi = std::log(std::max(a_lo, a_hi)) + kHalfWidth;
  const int scan = static_cast<int>(std::ceil((t_hi - t_lo) / kMaxStep)) + 1;
  const double step = (t_hi - t_lo) / (scan - 1);
  auto objective = [&](double t) {
    Eigen::MatrixXd a(1, 1);
    a(0, 0) = std::exp(t);
    const double r = res(a, m);
    return r * r;
  };
  double best_t = t_lo;
  double best = objective(t_lo);
  for (int k = 1; k < scan; ++k) {
    const double t = t_lo + k * step;
    const double v = objective(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  const auto [t, v] = boost::math::tools::brent_find_minima(objective, best_t - step, best_t + step, 50);
  if (v < best) best_t = t;
  Eigen::MatrixXd a(1, 1);
  a(0, 0) = std::exp(best_t);
  return {a, res(a, m)};
}

// Nelder–Mead over the log-Cholesky parameters (log l00, l10, log l11).
Fit refine_2d(const ProjectionResidual& res, const Eigen::MatrixXd& a0, int m) {
  using Vec = Eigen::Vector3d;
  auto to_matrix = [](const Vec& p) {
    Eigen::Matrix2d l;
    l << std::exp(p(0)), 0.0, p(1), std::exp(p(2));
    return Eigen::MatrixXd(l * l.transpose());
  };
  auto objective = [&](const Vec& p) {
    const double r = res(to_matrix(p), m);
    return r * r;
  };
  const Eigen::Matrix2d l0 = Eigen::LLT<Eigen::Matrix2d>(Eigen::Matrix2d(a0)).matrixL();
  Vec start(std::log(l0(0, 0)), l0(1, 0), std::log(l0(1, 1)));
  double step = 0.3;
  for (int restart = 0; restart < 4; ++restart, step *= 0.2) {
    std::array<Vec, 4> x;
    std::array<double, 4> fx;
    x[0] = start;
    for (int k = 0; k < 3; ++k) {
      x[static_cast<std::size_t>(k + 1)] = start;
      x[static_cast<std::size_t>(k + 1)](k) += step;
    }
    for (std::size_t k = 0; k < 4; ++k) fx[k] = objective(x[k]);
    for (int iter = 0; iter < 400; ++iter) {
      std::array<std::size_t, 4> order{0, 1, 2, 3};
      std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return fx[i] < fx[j]; });
      std::array<Vec, 4> xs;
      std::array<double, 4> fs;
      for (std::size_t k = 0; k < 4; ++k) {
        xs[k] = x[order[k]];
        fs[k] = fx[order[k]];
      }
      x = xs;
      fx = fs;
      if (fx[3] - fx[0] <= 1e-28 + 1e-12 * fx[0]) break;
      const Vec centroid = (x[0] + x[1] + x[2]) / 3.0;
      const Vec xr = centroid + (centroid - x[3]);
      const double fr = objective(xr);
      if (fr < fx[0]) {
        const Vec xe = centroid + 2.0 * (centroid - x[3]);
        const double fe = objective(xe);
        if (fe < fr) {
          x[3] = xe;
          fx[3] = fe;
        } else {
          x[3] = xr;
          fx[3] = fr;
        }
      } else if (fr < fx[2]) {
        x[3] = xr;
        fx[3] = fr;
      } else {
        const Vec xc = centroid + 0.5 * (x[3] - centroid);
        const double fc = objective(xc);
        if (fc < fx[3]) {
          x[3] = xc;
          fx[3] = fc;
        } else {
          for (std::size_t k = 1; k < 4; ++k) {
            x[k] = x[0] + 0.5 * (x[k] - x[0]);
            fx[k] = objective(x[k]);
          }
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < 4; ++k)
      if (fx[k] < fx[best]) best = k;
    start = x[best];
  }
  const Eigen::MatrixXd a = to_matrix(start);
  return {a, res(a, m)};
}

// Weighted least-squares fit of log|g| by c + <l, x> - pi <A' x, x> over the
// region |g| > kRegionFraction * max|g|, with weights |g|.
Eigen::MatrixXd fit_log_quadratic(const Signal& g, std::size_t& points) {
  const Grid& grid = g.grid();
  const int d = grid.dim();
  double gmax = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) gmax = std::max(gmax, std::abs(g[i]));
  std::vector<std::size_t> region;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::abs(g[i]) > kRegionFraction * gmax) region.push_back(i);
  points = region.size();
  if (region.size() < kMinFitPoints)
    throw_precondition("detect: fit region has fewer than 50 lattice points");
  const int params = d == 1 ? 3 : 6;
  Eigen::MatrixXd design(static_cast<Eigen::Index>(region.size()), params);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(region.size()));
  for (std::size_t r = 0; r < region.size(); ++r) {
    const auto p = grid.point(region[r]);
    const double a = std::abs(g[region[r]]);
    const double w = std::sqrt(a / gmax);
    const auto row = static_cast<Eigen::Index>(r);
    if (d == 1) {
      design.row(row) << 1.0, p[0], -kPi * p[0] * p[0];
    } else {
      design.row(row) << 1.0, p[0], p[1], -kPi * p[0] * p[0], -2.0 * kPi * p[0] * p[1], -kPi * p[1] * p[1];
    }
    design.row(row) *= w;
    rhs(row) = w * std::log(a / gmax);
  }
  const Eigen::VectorXd sol = design.colPivHouseholderQr().solve(rhs);
  Eigen::MatrixXd a(d, d);
  if (d == 1)
    a(0, 0) = sol(2);
  else
    a << sol(3), sol(4), sol(4), sol(5);
  return a;
}

// Quadratic phase: fits d/dx_j arg g ~ -2 pi (B x)_j + w_j from neighbour
// phase differences; squaring the increments removes sign flips of real factors.
Eigen::MatrixXd fit_chirp(const Signal& g) {
  const Grid& grid = g.grid();
  const int d = grid.dim();
  const int n = grid.points_per_axis();
  double gmax = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) gmax = std::max(gmax, std::abs(g[i]));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<double> rows_w, rows_val;
    std::vector<std::array<double, 2>> rows_mid;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto idx = grid.axis_indices(i);
      if (idx[static_cast<std::size_t>(j)] + 1 >= n) continue;
      idx[static_cast<std::size_t>(j)] += 1;
      const std::size_t k = grid.flat_index(std::span<const int>(idx.data(), static_cast<std::size_t>(d)));
      const double w = std::min(std::abs(g[i]), std::abs(g[k])) / gmax;
      if (w <= kRegionFraction) continue;
      const cplx inc = g[k] * std::conj(g[i]);
      const double dphi = std::arg(inc * inc) / (2.0 * grid.spacing());
      auto p = grid.point(i);
      p[static_cast<std::size_t>(j)] += 0.5 * grid.spacing();
      rows_w.push_back(std::sqrt(w));
      rows_val.push_back(dphi);
      rows_mid.push_back(p);
    }
    if (rows_val.size() < kMinFitPoints) continue;
    Eigen::MatrixXd design(static_cast<Eigen::Index>(rows_val.size()), d + 1);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(rows_val.size()));
    for (std::size_t r = 0; r < rows_val.size(); ++r) {
      const auto row = static_cast<Eigen::Index>(r);
      design(row, 0) = rows_w[r];
      for (int k = 0; k < d; ++k) design(row, k + 1) = rows_w[r] * -2.0 * kPi * rows_mid[r][static_cast<std::size_t>(k)];
      rhs(row) = rows_w[r] * rows_val[r];
    }
    const Eigen::VectorXd sol = design.colPivHouseholderQr().solve(rhs);
    for (int k = 0; k < d; ++k) b(j, k) = sol(k + 1);
  }
  return 0.5 * (b + b.transpose());
}

// For f = P(x) exp(-pi <A x, x>) built from A-dilated Hermite functions,
// the position covariance V_x and frequency covariance V_y satisfy
// A V_x A = V_y; solve that for A.
Eigen::MatrixXd moment_ratio_estimate(const Signal& f) {
  const int d = f.dim();
  auto covariance = [d](const Signal& s) {
    const auto mean = mean_position(s);
    const double mass = std::pow(l2_norm(s), 2);
    Eigen::MatrixXd c(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        std::array<int, 2> powers{0, 0};
        powers[static_cast<std::size_t>(a)] += 1;
        powers[static_cast<std::size_t>(b)] += 1;
        c(a, b) = c(b, a) = moment(s, std::span<const int>(powers.data(), static_cast<std::size_t>(d)),
                                   std::span<const double>(mean.data(), static_cast<std::size_t>(d))) /
                            mass;
      }
    return c;
  };
  const Eigen::MatrixXd vx = covariance(f);
  const Eigen::MatrixXd vy = covariance(fourier(f));
  const Eigen::MatrixXd sx = sym_sqrt(clamp_spd(vx, 1e-12, 1e12));
  const Eigen::MatrixXd sx_inv = sx.inverse();
  const Eigen::MatrixXd a = sx_inv * sym_sqrt(clamp_spd(sx * vy * sx, 1e-12, 1e12)) * sx_inv;
  return clamp_spd(a, 1e-2, 1e2);
}

// The mollified signal carries C' = (C^{-1} + I)^{-1} for C = A + iB.
Eigen::MatrixXd deconvolve_chirp(const Eigen::MatrixXd& a_mollified, const Eigen::MatrixXd& b_mollified) {
  const Eigen::Index d = a_mollified.rows();
  Eigen::MatrixXcd c = a_mollified.cast<cplx>();
  c.imag() = b_mollified;
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(c);
  if (!lu.isInvertible()) return b_mollified;
  const Eigen::MatrixXcd m = lu.inverse() - Eigen::MatrixXcd::Identity(d, d);
  const Eigen::FullPivLU<Eigen::MatrixXcd> lm(m);
  if (!lm.isInvertible()) return b_mollified;
  const Eigen::MatrixXcd inv = lm.inverse();
  return 0.5 * (inv.imag() + inv.imag().transpose());
}

}  // namespace

DetectionResult detect(const Signal& f) {
  if (f.is_zero()) throw_precondition("detect: signal is identically zero");
  const int d = f.dim();
  DetectionResult out;
  const Signal g = gaussian_mollify(f);
  const Eigen::MatrixXd a_mollified = fit_log_quadratic(g, out.fit_points);

  // g = exp(-pi|x|^2) * f maps A to (A^{-1} + I)^{-1}; invert that law.
  Eigen::MatrixXd a0 = clamp_spd(a_mollified, 1e-6, 1e6);
  const Eigen::MatrixXd m = a0.inverse() - Eigen::MatrixXd::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  if (es.eigenvalues().minCoeff() > 1e-8) a0 = m.inverse();
  a0 = clamp_spd(a0, 1e-2, 1e2);
  out.a_initial = a0;

  const Eigen::MatrixXd a_moments = moment_ratio_estimate(f);

  const ProjectionResidual res(f);
  Fit best{a0, std::numeric_limits<double>::infinity()};
  int best_degree = 0;
  bool found = false;
  for (int deg = 0; deg <= kDetectMaxDegree; ++deg) {
    Fit fit{a0, 0.0};
    if (d == 1) {
      fit = refine_1d(res, a0(0, 0), a_moments(0, 0), deg);
    } else {
      const Fit from_fit = refine_2d(res, a0, deg);
      const Fit from_moments = refine_2d(res, a_moments, deg);
      fit = from_moments.residual < from_fit.residual ? from_moments : from_fit;
    }
    if (fit.residual < best.residual) {
      best = fit;
      best_degree = deg;
    }
    if (fit.residual < kDetectResidualThreshold) {
      found = true;
      break;
    }
  }
  out.a_est = best.a;
  out.degree_est = best_degree;
  out.residual = best.residual;

  const std::array<double, 3> ns{static_cast<double>(d), 2.0 * out.degree_est + d, 2.0 * out.degree_est + d + 2.0};
  for (double n_exp : ns) {
    Verdict v;
    try {
      v = bh_functional(f, n_exp).verdict;
    } catch (const NumericalError&) {
      v = Verdict::DivergentFast;
      out.bh_overflow = true;
    }
    out.bh_verdicts[n_exp] = v;
  }
  out.bh_consistent = is_divergent(out.bh_verdicts[ns[0]]) && is_divergent(out.bh_verdicts[ns[1]]) &&
                      !is_divergent(out.bh_verdicts[ns[2]]);
  out.chirp_est = Eigen::MatrixXd::Zero(d, d);
  if (!(found && out.bh_consistent)) {
    out.chirp_est = deconvolve_chirp(a_mollified, fit_chirp(g));
    out.chirp_detected = out.chirp_est.cwiseAbs().maxCoeff() > kChirpThreshold;
  }
  out.is_gauss_hermite = found && out.bh_consistent && !out.chirp_detected;
  return out;
}

Signal center_time_frequency(const Signal& s) {
  if (s.is_zero()) return s;
  const int d = s.dim();
  const auto freq = mean_position(fourier(s));
  std::array<double, 2> minus_freq{-freq[0], -freq[1]};
  const Signal demod = modulate(s, std::span<const double>(minus_freq.data(), static_cast<std::size_t>(d)));
  const auto pos = mean_position(demod);
  std::array<double, 2> minus_pos{-pos[0], -pos[1]};
  return translate_spectral(demod, std::span<const double>(minus_pos.data(), static_cast<std::size_t>(d)));
}

EqualityProbe equality_case_probe(const Signal& u, const Signal& v) {
  EqualityProbe p;
  p.evidence = covariance_report(u, v);
  if (!p.evidence.equality_case) return p;
  p.detect_u = detect(center_time_frequency(u));
  p.detect_v = detect(center_time_frequency(v));
  p.is_equality_pair = p.detect_u->is_gauss_hermite && p.detect_u->degree_est == 0 &&
                       p.detect_v->is_gauss_hermite && p.detect_v->degree_est == 0;
  return p;
}

}  // namespace tfu
