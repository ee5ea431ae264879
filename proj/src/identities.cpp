#include "tfu/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/operators.hpp"
#include "tfu/transforms.hpp"

namespace tfu {
namespace {

using Coords = std::array<double, 2>;

bool on_multiple(double value, double step) {
  const double k = value / step;
  return std::abs(k - std::round(k)) <= 1e-9 * std::max(1.0, std::abs(k));
}

struct Comparison {
  double error = 0.0;
  std::size_t count = 0;
};

// Walks every sample of `lhs`; `rhs` maps (x, y, lhs value) to the expected
// value, or nullopt where the right-hand side is off its lattice.
Comparison compare(const Surface& lhs,
                   const std::function<std::optional<cplx>(const Coords&, const Coords&)>& rhs) {
  Comparison c;
  const Grid& xg = lhs.x_grid();
  const Grid& yg = lhs.y_grid();
  for (std::size_t ix = 0; ix < xg.size(); ++ix) {
    const Coords x = xg.point(ix);
    for (std::size_t iy = 0; iy < yg.size(); ++iy) {
      const Coords y = yg.point(iy);
      const auto expected = rhs(x, y);
      if (!expected) continue;
      c.error = std::max(c.error, std::abs(lhs.at(ix, iy) - *expected));
      ++c.count;
    }
  }
  return c;
}

std::span<const double> view(const Coords& p, int d) { return {p.data(), static_cast<std::size_t>(d)}; }

std::optional<cplx> lookup(const Surface& s, const Coords& x, const Coords& y) {
  const int d = s.dim();
  return s.value_at(view(x, d), view(y, d));
}

double dot(const Coords& a, const Coords& b, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
  return s;
}

}  // namespace

double Lem0Report::max_error() const {
  return std::max({shift, modulation, dilation, reflection, fourier, hermitian});
}

Lem0Report verify_lem0(const Signal& u, const Signal& v, const OperatorParams& p) {
  require(u.grid() == v.grid(), "verify_lem0: u and v must share a grid");
  if (!(p.dilation > 0.0)) throw_precondition("verify_lem0: dilation must be positive");
  const Grid& g = u.grid();
  const int d = g.dim();
  for (int j = 0; j < d; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    if (!on_multiple(p.shift_v[jj] - p.shift_u[jj], 2.0 * g.spacing()) ||
        !on_multiple(0.5 * (p.shift_u[jj] + p.shift_v[jj]), g.spacing()))
      throw_precondition("verify_lem0: shifts are off the lattice");
    if (!on_multiple(p.modulation_u[jj] - p.modulation_v[jj], g.dual().spacing()))
      throw_precondition("verify_lem0: modulation difference is off the dual lattice");
  }

  const Surface base = ambiguity(u, v);
  Lem0Report r;

  {
    const Surface lhs = ambiguity(translate(u, view(p.shift_u, d)), translate(v, view(p.shift_v, d)));
    Coords ab{p.shift_u[0] + p.shift_v[0], p.shift_u[1] + p.shift_v[1]};
    const auto c = compare(lhs, [&](const Coords& x, const Coords& y) -> std::optional<cplx> {
      Coords xs{x[0] + p.shift_v[0] - p.shift_u[0], x[1] + p.shift_v[1] - p.shift_u[1]};
      const auto a = lookup(base, xs, y);
      if (!a) return std::nullopt;
      return std::polar(1.0, -kPi * dot(ab, y, d)) * *a;
    });
    r.shift = c.error;
    r.compared[0] = c.count;
  }
  {
    const Surface lhs =
        ambiguity(modulate(u, view(p.modulation_u, d)), modulate(v, view(p.modulation_v, d)));
    Coords ws{p.modulation_u[0] + p.modulation_v[0], p.modulation_u[1] + p.modulation_v[1]};
    const auto c = compare(lhs, [&](const Coords& x, const Coords& y) -> std::optional<cplx> {
      Coords ys{y[0] - p.modulation_u[0] + p.modulation_v[0], y[1] - p.modulation_u[1] + p.modulation_v[1]};
      const auto a = lookup(base, x, ys);
      if (!a) return std::nullopt;
      return std::polar(1.0, kPi * dot(ws, x, d)) * *a;
    });
    r.modulation = c.error;
    r.compared[1] = c.count;
  }
  {
    const auto du = dilate(u, p.dilation);
    const auto dv = dilate(v, p.dilation);
    r.dilation_lossy = du.lossy || dv.lossy;
    const Surface lhs = ambiguity(du.signal, dv.signal);
    const double l = p.dilation;
    const auto c = compare(lhs, [&](const Coords& x, const Coords& y) {
      return lookup(base, Coords{l * x[0], l * x[1]}, Coords{y[0] / l, y[1] / l});
    });
    r.dilation = c.error;
    r.compared[2] = c.count;
  }
  {
    const Surface lhs = ambiguity(reflect(u), reflect(v));
    const auto c = compare(lhs, [&](const Coords& x, const Coords& y) {
      return lookup(base, Coords{-x[0], -x[1]}, Coords{-y[0], -y[1]});
    });
    r.reflection = c.error;
    r.compared[3] = c.count;
  }
  {
    const Surface lhs = ambiguity(fourier(u), fourier(v));
    const auto c = compare(lhs, [&](const Coords& x, const Coords& y) {
      return lookup(base, Coords{-y[0], -y[1]}, x);
    });
    r.fourier = c.error;
    r.compared[4] = c.count;
  }
  {
    const Surface vu = ambiguity(v, u);
    const auto c = compare(base, [&](const Coords& x, const Coords& y) -> std::optional<cplx> {
      const auto a = lookup(vu, Coords{-x[0], -x[1]}, Coords{-y[0], -y[1]});
      if (!a) return std::nullopt;
      return std::conj(*a);
    });
    r.hermitian = c.error;
    r.compared[5] = c.count;
  }
  return r;
}

FourambReport verify_fouramb(const Signal& u, const Signal& v, const Signal& w) {
  require(u.grid() == v.grid() && v.grid() == w.grid(), "verify_fouramb: signals must share a grid");
  const Surface auv = ambiguity(u, v);
  const Surface avw = ambiguity(v, w);
  const Grid& sg = auv.x_grid();
  const Grid& tg = auv.y_grid();
  const int d = sg.dim();
  const int n = sg.points_per_axis();

  std::vector<cplx> f(auv.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = auv.samples()[i] * std::conj(avw.samples()[i]);
  std::vector<int> shape(static_cast<std::size_t>(2 * d), n);
  for (int axis = 0; axis < 2 * d; ++axis)
    continuous_dft_axis(f, shape, axis, axis < d ? sg.spacing() : tg.spacing(), +1);

  // Output lattices: x dual to s, y dual to t.
  const Grid xg = sg.dual();
  const Grid yg = tg.dual();
  const Surface lhs(xg, yg, std::move(f));
  const auto c = compare(lhs, [&](const Coords& x, const Coords& y) -> std::optional<cplx> {
    const Coords mx{-x[0], -x[1]};
    const auto a = lookup(auv, y, mx);
    const auto b = lookup(avw, y, mx);
    if (!a || !b) return std::nullopt;
    return *a * std::conj(*b);
  });
  return {c.error, c.count};
}

IdentityCheck verify_wigner_relation(const Signal& u, const Signal& v) {
  require(u.grid() == v.grid(), "verify_wigner_relation: signals must share a grid");
  const Surface w = wigner(u, v);
  const Surface a = ambiguity(u, reflect(v));
  const int d = u.dim();
  const double scale = std::pow(2.0, d);
  const auto c = compare(w, [&](const Coords& x, const Coords& y) -> std::optional<cplx> {
    const Coords x2{2 * x[0], 2 * x[1]};
    const Coords y2{-2 * y[0], -2 * y[1]};
    const auto value = lookup(a, x2, y2);
    if (!value) return std::nullopt;
    return scale * *value;
  });
  return {c.error, c.count};
}

}  // namespace tfu
