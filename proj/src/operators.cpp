#include "tfu/operators.hpp"

#include <cmath>
#include <vector>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"

namespace tfu {
namespace {

int lattice_steps(double value, double spacing, const char* what) {
  const double k = value / spacing;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9 * std::max(1.0, std::abs(k))) throw_precondition(what);
  return static_cast<int>(r);
}

}  // namespace

Signal translate(const Signal& s, std::span<const double> shift) {
  const Grid& g = s.grid();
  const int d = g.dim();
  require(static_cast<int>(shift.size()) == d, "translate: shift has wrong length");
  const int n = g.points_per_axis();
  std::array<int, 2> steps{0, 0};
  for (int j = 0; j < d; ++j)
    steps[static_cast<std::size_t>(j)] =
        lattice_steps(shift[static_cast<std::size_t>(j)], g.spacing(), "translate: shift is not on the lattice");
  std::vector<cplx> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = g.axis_indices(i);
    for (int j = 0; j < d; ++j) {
      auto& k = idx[static_cast<std::size_t>(j)];
      k = ((k - steps[static_cast<std::size_t>(j)]) % n + n) % n;
    }
    out[i] = s[g.flat_index(std::span<const int>(idx.data(), static_cast<std::size_t>(d)))];
  }
  Signal r(g, std::move(out));
  if (s.closed_form()) r = r.with_closed_form(s.closed_form()->translated(shift));
  return r;
}

Signal translate_spectral(const Signal& s, std::span<const double> shift) {
  const int d = s.dim();
  require(static_cast<int>(shift.size()) == d, "translate: shift has wrong length");
  const Signal f = fourier(s);
  const Grid& dual = f.grid();
  std::vector<cplx> ramped(f.samples().begin(), f.samples().end());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < ramped.size(); ++i) {
    dual.point(i, p);
    double phase = 0.0;
    for (int j = 0; j < d; ++j) phase += shift[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
    ramped[i] *= std::polar(1.0, -2.0 * kPi * phase);
  }
  Signal r = inverse_fourier(Signal(dual, std::move(ramped)));
  if (s.closed_form()) r = r.with_closed_form(s.closed_form()->translated(shift));
  return r;
}

Signal modulate(const Signal& s, std::span<const double> omega) {
  const Grid& g = s.grid();
  const int d = g.dim();
  require(static_cast<int>(omega.size()) == d, "modulate: frequency has wrong length");
  std::vector<cplx> out(s.samples().begin(), s.samples().end());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    g.point(i, p);
    double phase = 0.0;
    for (int j = 0; j < d; ++j) phase += omega[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
    out[i] *= std::polar(1.0, 2.0 * kPi * phase);
  }
  Signal r(g, std::move(out));
  if (s.closed_form()) r = r.with_closed_form(s.closed_form()->modulated(omega));
  return r;
}

Signal reflect(const Signal& s) {
  const Grid& g = s.grid();
  const int d = g.dim();
  const int n = g.points_per_axis();
  std::vector<cplx> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = g.axis_indices(i);
    for (int j = 0; j < d; ++j) {
      auto& k = idx[static_cast<std::size_t>(j)];
      k = (n - k) % n;
    }
    out[i] = s[g.flat_index(std::span<const int>(idx.data(), static_cast<std::size_t>(d)))];
  }
  Signal r(g, std::move(out));
  if (s.closed_form()) r = r.with_closed_form(s.closed_form()->reflected());
  return r;
}

DilateResult dilate(const Signal& s, double lambda) {
  if (!(lambda > 0.0)) throw_precondition("dilate: lambda must be positive");
  const Grid& g = s.grid();
  if (s.closed_form()) return {Signal::from_closed_form(g, s.closed_form()->dilated(lambda)), false};

  const int d = g.dim();
  const int n = g.points_per_axis();
  const double scale = std::pow(lambda, 0.5 * d);
  std::vector<cplx> out(s.size());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    g.point(i, p);
    // Multilinear interpolation at lambda * x.
    std::array<int, 2> lo{0, 0};
    std::array<double, 2> frac{0.0, 0.0};
    bool inside = true;
    for (int j = 0; j < d; ++j) {
      const double k = (lambda * p[static_cast<std::size_t>(j)] + g.half_extent()) / g.spacing();
      const double f = std::floor(k);
      lo[static_cast<std::size_t>(j)] = static_cast<int>(f);
      frac[static_cast<std::size_t>(j)] = k - f;
      if (f < 0 || f > n - 1) inside = false;
    }
    if (!inside) continue;
    cplx acc{};
    const int corners = 1 << d;
    for (int c = 0; c < corners; ++c) {
      std::array<int, 2> idx{0, 0};
      double w = 1.0;
      bool ok = true;
      for (int j = 0; j < d; ++j) {
        const int bit = (c >> j) & 1;
        idx[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)] + bit;
        w *= bit ? frac[static_cast<std::size_t>(j)] : 1.0 - frac[static_cast<std::size_t>(j)];
        if (idx[static_cast<std::size_t>(j)] >= n) ok = false;
      }
      if (ok && w != 0.0) acc += w * s[g.flat_index(std::span<const int>(idx.data(), static_cast<std::size_t>(d)))];
    }
    out[i] = scale * acc;
  }
  return {Signal(g, std::move(out)), true};
}

Signal gaussian_mollify(const Signal& s) {
  const Signal f = fourier(s);
  const Grid& dual = f.grid();
  std::vector<cplx> damped(f.samples().begin(), f.samples().end());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < damped.size(); ++i) {
    dual.point(i, p);
    double r2 = 0.0;
    for (int j = 0; j < dual.dim(); ++j) r2 += p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
    damped[i] *= std::exp(-kPi * r2);
  }
  Signal g = inverse_fourier(Signal(dual, std::move(damped)));
  if (s.closed_form()) {
    const int d = s.dim();
    const ClosedForm hat = s.closed_form()->fourier() * gaussian_closed_form(Eigen::MatrixXd::Identity(d, d));
    g = g.with_closed_form(hat.inverse_fourier());
  }
  return g;
}

}  // namespace tfu
