#include "tfu/functional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/parallel.hpp"
#include "tfu/transforms.hpp"

namespace tfu {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogMax = std::log(std::numeric_limits<double>::max());

using Point = std::array<double, 4>;

double log_sum_exp_sorted(std::vector<double>& v) {
  if (v.empty()) return kNegInf;
  std::sort(v.begin(), v.end());
  const double m = v.back();
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// Bins log-addends by truncation shell: addend with radius r goes to the
// first shell i with r <= radii[i]; points past the last radius are dropped.
class ShellSink {
 public:
  explicit ShellSink(const std::vector<double>& radii) : radii_(&radii), bins_(radii.size()) {}

  void add(double r, double log_value, const Point& where) {
    if (log_value == kNegInf || std::isnan(log_value)) return;
    const auto& radii = *radii_;
    const double tol = 1e-12 * radii.back();
    auto it = std::lower_bound(radii.begin(), radii.end(), r - tol);
    if (it == radii.end()) return;
    bins_[static_cast<std::size_t>(it - radii.begin())].push_back(log_value);
    if (log_value > max_value_) {
      max_value_ = log_value;
      max_point_ = where;
    }
  }

  std::vector<double> shell_log_sums() {
    std::vector<double> out(bins_.size());
    for (std::size_t i = 0; i < bins_.size(); ++i) out[i] = log_sum_exp_sorted(bins_[i]);
    return out;
  }
  double max_value() const { return max_value_; }
  const Point& max_point() const { return max_point_; }

 private:
  const std::vector<double>* radii_;
  std::vector<std::vector<double>> bins_;
  double max_value_ = kNegInf;
  Point max_point_{};
};

struct RowResult {
  std::vector<std::vector<double>> shells;  // [trace][shell]
  std::vector<double> max_value;
  std::vector<Point> max_point;
};

using RowFill = std::function<void(std::size_t row, std::vector<ShellSink>& sinks)>;

std::vector<FunctionalTrace> accumulate(const std::vector<double>& radii, std::size_t rows, std::size_t traces,
                                        int dim, const RowFill& fill) {
  std::vector<RowResult> results(rows);
  parallel_for(rows, [&](std::size_t r) {
    std::vector<ShellSink> sinks(traces, ShellSink(radii));
    fill(r, sinks);
    RowResult& out = results[r];
    for (auto& s : sinks) {
      out.shells.push_back(s.shell_log_sums());
      out.max_value.push_back(s.max_value());
      out.max_point.push_back(s.max_point());
    }
  });

  std::vector<FunctionalTrace> out(traces);
  for (std::size_t t = 0; t < traces; ++t) {
    FunctionalTrace& tr = out[t];
    tr.radii = radii;
    double running = kNegInf;
    double worst = kNegInf;
    Point worst_point{};
    for (std::size_t i = 0; i < radii.size(); ++i) {
      std::vector<double> parts;
      parts.reserve(rows + 1);
      for (const auto& rr : results) parts.push_back(rr.shells[t][i]);
      parts.push_back(running);
      running = log_sum_exp_sorted(parts);
      tr.log_values.push_back(running);
    }
    for (const auto& rr : results)
      if (rr.max_value[t] > worst) {
        worst = rr.max_value[t];
        worst_point = rr.max_point[t];
      }
    if (running > kLogMax) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "functional overflows double range (log I = " << running << "); largest addend at x=(";
      for (int j = 0; j < dim; ++j) msg << (j ? "," : "") << worst_point[static_cast<std::size_t>(j)];
      msg << ") y=(";
      for (int j = 0; j < dim; ++j) msg << (j ? "," : "") << worst_point[static_cast<std::size_t>(2 + j)];
      msg << ")";
      throw_numerical(msg.str());
    }
    for (double lv : tr.log_values) tr.values.push_back(std::exp(lv));
    classify(tr);
  }
  return out;
}

// Lattice carrying log|h| for h = f or f^.
struct Side {
  Grid grid;
  std::vector<double> log_abs;
  std::vector<std::array<double, 2>> points;
  std::vector<double> norms;
};

Side make_side(const Grid& g, const std::function<double(std::size_t, std::span<const double>)>& log_abs) {
  Side s{g, std::vector<double>(g.size()), std::vector<std::array<double, 2>>(g.size()), std::vector<double>(g.size())};
  parallel_for(g.size(), [&](std::size_t i) {
    s.points[i] = g.point(i);
    const std::span<const double> p(s.points[i].data(), static_cast<std::size_t>(g.dim()));
    double r2 = 0.0;
    for (double c : p) r2 += c * c;
    s.norms[i] = std::sqrt(r2);
    s.log_abs[i] = log_abs(i, p);
  });
  return s;
}

double log_abs_sample(cplx z) {
  const double a = std::abs(z);
  return a > 0.0 ? std::log(a) : kNegInf;
}

Side spatial_side(const Signal& f) {
  if (const ClosedForm* form = f.closed_form())
    return make_side(f.grid(), [form](std::size_t, std::span<const double> p) { return form->log_abs(p); });
  return make_side(f.grid(), [&f](std::size_t i, std::span<const double>) { return log_abs_sample(f[i]); });
}

Side spectral_side(const Signal& f) {
  if (const ClosedForm* form = f.closed_form()) {
    const ClosedForm hat = form->fourier();
    return make_side(f.grid(), [&hat](std::size_t, std::span<const double> p) { return hat.log_abs(p); });
  }
  const Signal hat = fourier(f);
  return make_side(hat.grid(), [&hat](std::size_t i, std::span<const double>) { return log_abs_sample(hat[i]); });
}

void require_nonzero(const Signal& f, const char* what) {
  if (f.is_zero()) throw_precondition(what);
}

void check_axis(int axis, int dim) {
  if (axis < 0 || axis >= dim) throw_precondition("functional: axis out of range");
}

using PairWeight = std::function<double(const std::array<double, 2>&, double, const std::array<double, 2>&, double)>;

FunctionalTrace pair_functional(const Signal& f, std::span<const double> radii_in, const PairWeight& weight) {
  require_nonzero(f, "functional: signal is identically zero");
  const Side xs = spatial_side(f);
  const Side ys = spectral_side(f);
  const auto radii = resolve_radii(radii_in, f.grid().half_extent());
  const double log_cell = std::log(xs.grid.cell_volume() * ys.grid.cell_volume());
  const double rmax = radii.back() * (1.0 + 1e-12);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < xs.points.size(); ++i)
    if (xs.norms[i] <= rmax && xs.log_abs[i] != kNegInf) rows.push_back(i);
  const int d = f.dim();
  auto traces = accumulate(radii, rows.size(), 1, d, [&](std::size_t r, std::vector<ShellSink>& sinks) {
    const std::size_t i = rows[r];
    const auto& x = xs.points[i];
    for (std::size_t j = 0; j < ys.points.size(); ++j) {
      if (ys.norms[j] > rmax) continue;
      const auto& y = ys.points[j];
      const double value = xs.log_abs[i] + ys.log_abs[j] + log_cell + weight(x, xs.norms[i], y, ys.norms[j]);
      sinks[0].add(std::max(xs.norms[i], ys.norms[j]), value, Point{x[0], x[1], y[0], y[1]});
    }
  });
  return std::move(traces[0]);
}

using SideWeight = std::function<double(const std::array<double, 2>&, double)>;

FunctionalTrace side_functional(const Side& s, const std::vector<double>& radii, bool spectral,
                                const SideWeight& weight) {
  const double log_cell = std::log(s.grid.cell_volume());
  const int d = s.grid.dim();
  const std::size_t chunk = static_cast<std::size_t>(s.grid.points_per_axis());
  const std::size_t rows = s.points.size() / chunk;
  auto traces = accumulate(radii, rows, 1, d, [&](std::size_t r, std::vector<ShellSink>& sinks) {
    for (std::size_t i = r * chunk; i < (r + 1) * chunk; ++i) {
      const auto& p = s.points[i];
      const Point where = spectral ? Point{0, 0, p[0], p[1]} : Point{p[0], p[1], 0, 0};
      sinks[0].add(s.norms[i], s.log_abs[i] + log_cell + weight(p, s.norms[i]), where);
    }
  });
  (void)d;
  return std::move(traces[0]);
}

double dot(const std::array<double, 2>& a, const std::array<double, 2>& b, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
  return s;
}

void check_p(double p) {
  if (!(p > 1.0 && p < 2.0)) throw_precondition("gelfand_shilov: p must satisfy 1 < p < 2");
}

std::string regime(double ab, double critical) {
  if (std::abs(ab - critical) <= 1e-9 * critical) return "critical";
  return ab < critical ? "subcritical" : "supercritical";
}

// Envelope ratio statistics: C = max ratio; slope of log running max vs log R.
struct Envelope {
  double c = 0.0;
  double slope = 0.0;
};

Envelope envelope(const Side& s, const std::vector<double>& radii, const Eigen::MatrixXd& m, double n_exp) {
  const int d = s.grid.dim();
  std::vector<double> running(radii.size(), kNegInf);
  const double tol = 1e-12 * radii.back();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (s.log_abs[i] == kNegInf) continue;
    const auto& p = s.points[i];
    double q = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) q += m(a, b) * p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
    const double lr = s.log_abs[i] - n_exp * std::log1p(s.norms[i]) + kPi * q;
    auto it = std::lower_bound(radii.begin(), radii.end(), s.norms[i] - tol);
    if (it == radii.end()) continue;
    auto& slot = running[static_cast<std::size_t>(it - radii.begin())];
    slot = std::max(slot, lr);
  }
  for (std::size_t i = 1; i < running.size(); ++i) running[i] = std::max(running[i], running[i - 1]);
  Envelope e;
  if (running.back() == kNegInf) return e;
  e.c = std::exp(running.back());
  const std::size_t start = radii.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (std::size_t i = start; i < radii.size(); ++i) {
    if (running[i] == kNegInf) continue;
    const double lx = std::log(radii[i]);
    sx += lx;
    sy += running[i];
    sxx += lx * lx;
    sxy += lx * running[i];
    ++cnt;
  }
  if (cnt >= 2) e.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return e;
}

void check_spd(const Eigen::MatrixXd& m, int d, const char* what) {
  if (m.rows() != d || m.cols() != d) throw_precondition(std::string(what) + ": wrong matrix size");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw_precondition(std::string(what) + ": matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() <= 0.0) throw_precondition(std::string(what) + ": matrix is not positive definite");
}

// Rows of log|A(u,v)(x, .)| for x on the ambiguity x-lattice.
struct AmbiguityRows {
  Grid x_grid;
  Side y_side;  // points/norms of the y-lattice; log_abs unused
  std::vector<std::size_t> rows;
  std::function<std::vector<double>(std::size_t x_flat, const Side& ys)> log_row;
};

AmbiguityRows ambiguity_rows(const Signal& u, const Signal& v, double rmax) {
  require(u.grid() == v.grid(), "functional: u and v must share a grid");
  const Grid& g = u.grid();
  const Grid xg = ambiguity_x_grid(g);
  const bool exact = u.closed_form() && v.closed_form();
  const Grid yg = exact ? g : g.dual();
  AmbiguityRows ar{xg, make_side(yg, [](std::size_t, std::span<const double>) { return 0.0; }), {}, {}};
  for (std::size_t i = 0; i < xg.size(); ++i) {
    const auto p = xg.point(i);
    double r2 = 0.0;
    for (int j = 0; j < g.dim(); ++j) r2 += p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
    if (std::sqrt(r2) <= rmax) ar.rows.push_back(i);
  }
  if (exact) {
    const ClosedForm* uf = u.closed_form();
    const ClosedForm* vf = v.closed_form();
    ar.log_row = [uf, vf, xg](std::size_t x_flat, const Side& ys) {
      const auto x = xg.point(x_flat);
      const ClosedForm slice =
          ambiguity_slice(*uf, *vf, std::span<const double>(x.data(), static_cast<std::size_t>(xg.dim())));
      std::vector<double> out(ys.points.size());
      for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = slice.log_abs(std::span<const double>(ys.points[j].data(), static_cast<std::size_t>(xg.dim())));
      return out;
    };
  } else {
    ar.log_row = [&u, &v](std::size_t x_flat, const Side&) {
      const auto row = ambiguity_row(u, v, x_flat);
      std::vector<double> out(row.size());
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = log_abs_sample(row[j]);
      return out;
    };
  }
  return ar;
}

// Accumulates one trace per weight over the ambiguity surface.
std::vector<FunctionalTrace> surface_functionals(const Signal& u, const Signal& v, std::span<const double> radii_in,
                                                 const std::vector<PairWeight>& weights) {
  require_nonzero(u, "functional: u is identically zero");
  require_nonzero(v, "functional: v is identically zero");
  const auto radii = resolve_radii(radii_in, u.grid().half_extent());
  const double rmax = radii.back() * (1.0 + 1e-12);
  AmbiguityRows ar = ambiguity_rows(u, v, rmax);
  const Side& ys = ar.y_side;
  const double log_cell = std::log(ar.x_grid.cell_volume() * ys.grid.cell_volume());
  const int d = u.dim();
  return accumulate(radii, ar.rows.size(), weights.size(), d, [&](std::size_t r, std::vector<ShellSink>& sinks) {
    const std::size_t xi = ar.rows[r];
    const auto x = ar.x_grid.point(xi);
    const double xn = std::sqrt(dot(x, x, d));
    const auto la = ar.log_row(xi, ys);
    for (std::size_t j = 0; j < la.size(); ++j) {
      if (ys.norms[j] > rmax || la[j] == kNegInf) continue;
      const auto& y = ys.points[j];
      const double base = 2.0 * la[j] + log_cell;
      const double rad = std::max(xn, ys.norms[j]);
      for (std::size_t w = 0; w < weights.size(); ++w)
        sinks[w].add(rad, base + weights[w](x, xn, y, ys.norms[j]), Point{x[0], x[1], y[0], y[1]});
    }
  });
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Convergent:
      return "convergent";
    case Verdict::DivergentPolynomial:
      return "divergent-polynomial";
    case Verdict::DivergentFast:
      return "divergent-fast";
  }
  return "unknown";
}

void classify(FunctionalTrace& t) {
  const std::size_t k = t.radii.size();
  const std::size_t start = k / 2;
  std::vector<double> lx, ly;
  for (std::size_t i = start; i < k; ++i) {
    if (!std::isfinite(t.log_values[i])) continue;
    lx.push_back(std::log(t.radii[i]));
    ly.push_back(t.log_values[i]);
  }
  t.growth_exponent = 0.0;
  t.verdict = Verdict::Convergent;
  if (lx.size() < 2) return;
  const double m = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  t.growth_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  if (t.growth_exponent < kConvergenceThreshold) return;
  const double first = (ly[1] - ly[0]) / (lx[1] - lx[0]);
  const std::size_t e = lx.size() - 1;
  const double last = (ly[e] - ly[e - 1]) / (lx[e] - lx[e - 1]);
  t.verdict = (last > 2.0 && last > kFastSlopeRatio * first) ? Verdict::DivergentFast : Verdict::DivergentPolynomial;
}

std::vector<double> resolve_radii(std::span<const double> radii, double limit) {
  if (radii.empty()) return default_radii(limit);
  std::vector<double> r(radii.begin(), radii.end());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0)) throw_precondition("radii must be positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw_precondition("radii must be strictly increasing");
  }
  if (r.size() < 2) throw_precondition("at least two radii are required");
  if (r.back() > limit * (1.0 + 1e-12)) throw_precondition("radii exceed the grid half-extent");
  return r;
}

FunctionalTrace bh_functional(const Signal& f, double n_exp, std::span<const double> radii) {
  const int d = f.dim();
  return pair_functional(f, radii, [d, n_exp](const auto& x, double xn, const auto& y, double yn) {
    return 2.0 * kPi * std::abs(dot(x, y, d)) - n_exp * std::log1p(xn + yn);
  });
}

FunctionalTrace bh_functional_split(const Signal& f, double n_exp, std::span<const double> radii) {
  const int d = f.dim();
  return pair_functional(f, radii, [d, n_exp](const auto& x, double xn, const auto& y, double yn) {
    return 2.0 * kPi * std::abs(dot(x, y, d)) - 0.5 * n_exp * (std::log1p(xn) + std::log1p(yn));
  });
}

CowlingPriceResult cowling_price(const Signal& f, double a, double b, double n_exp, int axis,
                                 std::span<const double> radii_in) {
  if (!(a > 0.0 && b > 0.0)) throw_precondition("cowling_price: a and b must be positive");
  check_axis(axis, f.dim());
  require_nonzero(f, "cowling_price: signal is identically zero");
  const auto radii = resolve_radii(radii_in, f.grid().half_extent());
  const auto j = static_cast<std::size_t>(axis);
  CowlingPriceResult r;
  r.f_trace = side_functional(spatial_side(f), radii, false, [&](const auto& p, double) {
    return kPi * a * p[j] * p[j] - n_exp * std::log1p(std::abs(p[j]));
  });
  r.fhat_trace = side_functional(spectral_side(f), radii, true, [&](const auto& p, double) {
    return kPi * b * p[j] * p[j] - n_exp * std::log1p(std::abs(p[j]));
  });
  r.ab = a * b;
  r.both_finite_allowed = r.ab <= 1.0;
  r.both_convergent = !is_divergent(r.f_trace.verdict) && !is_divergent(r.fhat_trace.verdict);
  return r;
}

double gelfand_shilov_critical(double p) {
  check_p(p);
  return std::pow(std::abs(std::cos(p * kPi / 2.0)), 1.0 / p);
}

GelfandShilovResult gelfand_shilov(const Signal& f, double p, double a, double b, int axis,
                                   std::span<const double> radii_in) {
  check_p(p);
  if (!(a > 0.0 && b > 0.0)) throw_precondition("gelfand_shilov: a and b must be positive");
  check_axis(axis, f.dim());
  require_nonzero(f, "gelfand_shilov: signal is identically zero");
  const auto radii = resolve_radii(radii_in, f.grid().half_extent());
  const auto j = static_cast<std::size_t>(axis);
  GelfandShilovResult r;
  r.p = p;
  r.q = p / (p - 1.0);
  const double cx = 2.0 * kPi * std::pow(a, p) / p;
  const double cy = 2.0 * kPi * std::pow(b, r.q) / r.q;
  r.x_trace = side_functional(spatial_side(f), radii, false,
                              [&](const auto& x, double) { return cx * std::pow(std::abs(x[j]), p); });
  r.y_trace = side_functional(spectral_side(f), radii, true,
                              [&](const auto& y, double) { return cy * std::pow(std::abs(y[j]), r.q); });
  r.critical = gelfand_shilov_critical(p);
  r.ab = a * b;
  r.regime = regime(r.ab, r.critical);
  return r;
}

int hardy_case(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const int d = static_cast<int>(a.rows());
  check_spd(a, d, "hardy_check A");
  check_spd(b, d, "hardy_check B");
  const Eigen::MatrixXd gap = b - a.inverse();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gap + gap.transpose()));
  const auto ev = es.eigenvalues();
  constexpr double tol = 1e-10;
  if (ev.cwiseAbs().maxCoeff() <= tol) return 2;
  if (ev.minCoeff() >= -tol) return 1;
  return 3;
}

HardyResult hardy_check(const Signal& f, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double n_exp,
                        std::span<const double> radii_in) {
  const int d = f.dim();
  check_spd(a, d, "hardy_check A");
  check_spd(b, d, "hardy_check B");
  require_nonzero(f, "hardy_check: signal is identically zero");
  const auto radii = resolve_radii(radii_in, f.grid().half_extent());
  HardyResult r;
  const Envelope ef = envelope(spatial_side(f), radii, a, n_exp);
  const Envelope eh = envelope(spectral_side(f), radii, b, n_exp);
  constexpr double kEnvelopeSlope = 0.5;
  r.c_f = ef.c;
  r.c_fhat = eh.c;
  r.envelope_slope_f = ef.slope;
  r.envelope_slope_fhat = eh.slope;
  r.envelope_ok_f = ef.slope < kEnvelopeSlope;
  r.envelope_ok_fhat = eh.slope < kEnvelopeSlope;
  r.hardy_case = hardy_case(a, b);
  return r;
}

HbaResult hba_functionals(const Signal& u, const Signal& v, double n_exp, std::span<const double> radii) {
  const int d = u.dim();
  (void)d;
  std::vector<PairWeight> w;
  w.emplace_back([n_exp](const auto&, double xn, const auto&, double yn) {
    return kPi * (xn * xn + yn * yn) - n_exp * std::log1p(xn + yn);
  });
  w.emplace_back([n_exp](const auto&, double xn, const auto&, double) {
    return kPi * xn * xn - n_exp * std::log1p(xn);
  });
  w.emplace_back([n_exp](const auto&, double, const auto&, double yn) {
    return kPi * yn * yn - n_exp * std::log1p(yn);
  });
  auto t = surface_functionals(u, v, radii, w);
  return {std::move(t[0]), std::move(t[1]), std::move(t[2])};
}

GelfandShilovAmbiguityResult gelfand_shilov_ambiguity(const Signal& u, const Signal& v, double p, double a,
                                                      double b, int axis, std::span<const double> radii) {
  check_p(p);
  if (!(a > 0.0 && b > 0.0)) throw_precondition("gelfand_shilov_ambiguity: a and b must be positive");
  check_axis(axis, u.dim());
  GelfandShilovAmbiguityResult r;
  r.p = p;
  r.q = p / (p - 1.0);
  r.critical = gelfand_shilov_critical(p);
  r.ab = a * b;
  r.regime = regime(r.ab, r.critical);
  const auto j = static_cast<std::size_t>(axis);
  const double cx = 2.0 * kPi * std::pow(a, p) / p;
  const double cy = 2.0 * kPi * std::pow(b, r.q) / r.q;
  if (u.is_zero() || v.is_zero()) {
    // The surface vanishes identically: report zero traces.
    const auto rr = resolve_radii(radii, u.grid().half_extent());
    FunctionalTrace zero;
    zero.radii = rr;
    zero.values.assign(rr.size(), 0.0);
    zero.log_values.assign(rr.size(), kNegInf);
    classify(zero);
    r.x_trace = zero;
    r.y_trace = zero;
    return r;
  }
  std::vector<PairWeight> w;
  w.emplace_back([cx, p, j](const auto& x, double, const auto&, double) { return cx * std::pow(std::abs(x[j]), p); });
  const double q = r.q;
  w.emplace_back([cy, q, j](const auto&, double, const auto& y, double) { return cy * std::pow(std::abs(y[j]), q); });
  auto t = surface_functionals(u, v, radii, w);
  r.x_trace = std::move(t[0]);
  r.y_trace = std::move(t[1]);
  return r;
}

}  // namespace tfu
