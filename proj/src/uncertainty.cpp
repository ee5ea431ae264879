#include "tfu/uncertainty.hpp"

#include <cmath>
#include <sstream>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/parallel.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/transforms.hpp"

namespace tfu {
namespace {

// Weighted sums of |A(u,v)|^2 over the surface lattice, about centers (cx, cy):
// mass, first moments, and the second-moment blocks xx, yy, xy.
struct SurfaceMoments {
  double mass = 0.0;
  Eigen::VectorXd first_x, first_y;
  Eigen::MatrixXd xx, yy, xy;
};

SurfaceMoments surface_moments(const Signal& u, const Signal& v, const Eigen::VectorXd& cx,
                               const Eigen::VectorXd& cy) {
  const Grid& g = u.grid();
  const int d = g.dim();
  const Grid xg = ambiguity_x_grid(g);
  const Grid yg = g.dual();
  const std::size_t q_count = static_cast<std::size_t>(1 + 2 * d + 3 * d * d);
  std::vector<std::vector<double>> row_sums(xg.size());
  parallel_for(xg.size(), [&](std::size_t r) {
    const auto row = ambiguity_row(u, v, r);
    const auto xp = xg.point(r);
    std::vector<std::vector<double>> terms(q_count, std::vector<double>(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double w = std::norm(row[j]);
      const auto yp = yg.point(j);
      std::array<double, 2> x{}, y{};
      for (int a = 0; a < d; ++a) {
        x[static_cast<std::size_t>(a)] = xp[static_cast<std::size_t>(a)] - cx(a);
        y[static_cast<std::size_t>(a)] = yp[static_cast<std::size_t>(a)] - cy(a);
      }
      std::size_t q = 0;
      terms[q++][j] = w;
      for (int a = 0; a < d; ++a) terms[q++][j] = w * x[static_cast<std::size_t>(a)];
      for (int a = 0; a < d; ++a) terms[q++][j] = w * y[static_cast<std::size_t>(a)];
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
          terms[q][j] = w * x[ia] * x[ib];
          terms[q + static_cast<std::size_t>(d * d)][j] = w * y[ia] * y[ib];
          terms[q + static_cast<std::size_t>(2 * d * d)][j] = w * x[ia] * y[ib];
          ++q;
        }
    }
    auto& sums = row_sums[r];
    sums.resize(q_count);
    for (std::size_t k = 0; k < q_count; ++k) sums[k] = pairwise_sum(terms[k]);
  });

  const double cell = xg.cell_volume() * yg.cell_volume();
  std::vector<double> total(q_count);
  std::vector<double> column(row_sums.size());
  for (std::size_t k = 0; k < q_count; ++k) {
    for (std::size_t r = 0; r < row_sums.size(); ++r) column[r] = row_sums[r][k];
    total[k] = cell * pairwise_sum(column);
  }
  SurfaceMoments m;
  m.first_x.resize(d);
  m.first_y.resize(d);
  m.xx.resize(d, d);
  m.yy.resize(d, d);
  m.xy.resize(d, d);
  std::size_t q = 0;
  m.mass = total[q++];
  for (int a = 0; a < d; ++a) m.first_x(a) = total[q++];
  for (int a = 0; a < d; ++a) m.first_y(a) = total[q++];
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      m.xx(a, b) = total[q];
      m.yy(a, b) = total[q + static_cast<std::size_t>(d * d)];
      m.xy(a, b) = total[q + static_cast<std::size_t>(2 * d * d)];
      ++q;
    }
  return m;
}

void check_pair(const Signal& u, const Signal& v) {
  require(u.grid() == v.grid(), "u and v must share a grid");
  if (u.is_zero() || v.is_zero()) throw_precondition("input signal is identically zero");
}

// Means of the density, computed about the origin.
std::pair<Eigen::VectorXd, Eigen::VectorXd> density_means(const Signal& u, const Signal& v) {
  const int d = u.dim();
  const SurfaceMoments raw = surface_moments(u, v, Eigen::VectorXd::Zero(d), Eigen::VectorXd::Zero(d));
  if (!(raw.mass > 0.0)) throw_numerical("ambiguity surface has zero mass on the lattice");
  return {raw.first_x / raw.mass, raw.first_y / raw.mass};
}

}  // namespace

HeisenbergReport heisenberg_fourier(const Signal& f, int axis, std::optional<double> a, std::optional<double> b) {
  const int d = f.dim();
  if (axis < 0 || axis >= d) throw_precondition("heisenberg: axis out of range");
  if (f.is_zero()) throw_precondition("heisenberg: signal is identically zero");
  const Signal hat = fourier(f);
  HeisenbergReport r;
  r.direction = axis;
  r.center_a = a ? *a : mean_position(f)[static_cast<std::size_t>(axis)];
  r.center_b = b ? *b : mean_position(hat)[static_cast<std::size_t>(axis)];
  std::array<int, 2> powers{0, 0};
  powers[static_cast<std::size_t>(axis)] = 2;
  std::array<double, 2> ca{0.0, 0.0}, cb{0.0, 0.0};
  ca[static_cast<std::size_t>(axis)] = r.center_a;
  cb[static_cast<std::size_t>(axis)] = r.center_b;
  const auto span_d = [d](const auto& arr) { return std::span(arr.data(), static_cast<std::size_t>(d)); };
  r.factor1 = moment(f, span_d(powers), span_d(ca));
  r.factor2 = moment(hat, span_d(powers), span_d(cb));
  r.product = r.factor1 * r.factor2;
  const double n2 = l2_norm(f) * l2_norm(f);
  r.bound = n2 * n2 / (16.0 * kPi * kPi);
  r.ratio = r.product / r.bound;
  return r;
}

HeisenbergReport heisenberg_ambiguity(const Signal& u, const Signal& v, int axis, std::optional<double> a,
                                      std::optional<double> b) {
  check_pair(u, v);
  const int d = u.dim();
  if (axis < 0 || axis >= d) throw_precondition("heisenberg: axis out of range");
  HeisenbergReport r;
  r.direction = axis;
  Eigen::VectorXd cx = Eigen::VectorXd::Zero(d), cy = Eigen::VectorXd::Zero(d);
  if (!a || !b) {
    const auto [mx, my] = density_means(u, v);
    cx = mx;
    cy = my;
  }
  if (a) cx(axis) = *a;
  if (b) cy(axis) = *b;
  r.center_a = cx(axis);
  r.center_b = cy(axis);
  const SurfaceMoments m = surface_moments(u, v, cx, cy);
  r.factor1 = m.xx(axis, axis);
  r.factor2 = m.yy(axis, axis);
  r.product = r.factor1 * r.factor2;
  const double nu = l2_norm(u), nv = l2_norm(v);
  const double p2 = nu * nu * nv * nv;
  r.bound = p2 * p2 / (4.0 * kPi * kPi);
  r.ratio = r.product / r.bound;
  return r;
}

CovarianceReport covariance_report(const Signal& u, const Signal& v) {
  check_pair(u, v);
  const int d = u.dim();
  const auto [mx, my] = density_means(u, v);
  const SurfaceMoments m = surface_moments(u, v, mx, my);
  CovarianceReport r;
  r.dim = d;
  r.mean_x = mx;
  r.mean_y = my;
  r.total_mass = m.mass;
  const double nu = l2_norm(u), nv = l2_norm(v);
  r.norm_product_sq = nu * nu * nv * nv;
  r.v_x = m.xx / m.mass;
  r.v_y = m.yy / m.mass;
  r.v_x = 0.5 * (r.v_x + r.v_x.transpose()).eval();
  r.v_y = 0.5 * (r.v_y + r.v_y.transpose()).eval();
  r.cross_cov = m.xy / m.mass;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ey(r.v_y);
  const double max_ev = ey.eigenvalues().maxCoeff();
  const double min_ev = ey.eigenvalues().minCoeff();
  if (!(max_ev > 0.0) || min_ev < 1e-12 * max_ev) {
    std::ostringstream msg;
    msg << "V_Y is numerically singular (eigenvalues " << min_ev << " .. " << max_ev << ")";
    throw_numerical(msg.str());
  }
  const Eigen::MatrixXd vy_inv =
      ey.eigenvectors() * ey.eigenvalues().cwiseInverse().asDiagonal() * ey.eigenvectors().transpose();
  r.gap_matrix = 4.0 * kPi * kPi * r.v_x - vy_inv;
  r.gap_matrix = 0.5 * (r.gap_matrix + r.gap_matrix.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eg(r.gap_matrix);
  r.gap_eigenvalues = eg.eigenvalues();
  r.min_eigenvalue = r.gap_eigenvalues.minCoeff();
  r.det_product = r.v_x.determinant() * r.v_y.determinant();
  r.det_bound = std::pow(4.0 * kPi * kPi, -2.0 * d);
  r.det_bound_sharp = std::pow(4.0 * kPi * kPi, -static_cast<double>(d));
  r.trace_x = m.xx.trace();
  r.trace_y = m.yy.trace();
  r.trace_product = r.trace_x * r.trace_y;
  r.trace_bound = d * d * r.norm_product_sq * r.norm_product_sq / (4.0 * kPi * kPi);
  const double gap_norm = r.gap_matrix.cwiseAbs().maxCoeff();
  r.correlated = r.cross_cov.cwiseAbs().maxCoeff() > 1e-5;
  r.semidefinite = r.min_eigenvalue > -1e-5 * (1.0 + gap_norm);
  r.equality_case = gap_norm < 1e-4;
  return r;
}

}  // namespace tfu
