#include "tfu/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/parallel.hpp"
#include "tfu/quadrature.hpp"

namespace tfu {
namespace {

constexpr int kMaxSurfaceN2d = 64;

// Per-axis sample indices (u index, v index) for each t index; -1 marks a
// sample outside the box.
struct AxisMap {
  std::vector<int> iu;
  std::vector<int> iv;
};

int clip(int k, int n) { return (k >= 0 && k < n) ? k : -1; }

void check_pair(const Signal& u, const Signal& v) {
  require(u.grid() == v.grid(), "transform: u and v must share a grid");
  const Grid& g = u.grid();
  if (g.dim() == 2 && g.points_per_axis() > kMaxSurfaceN2d)
    throw_precondition("transform: d=2 surfaces are limited to n <= 64 points per axis");
}

// Fills h(t) = u[iu(t)] conj(v[iv(t)]) from per-axis maps.
std::vector<cplx> kernel(const Signal& u, const Signal& v, const std::array<AxisMap, 2>& maps) {
  const Grid& g = u.grid();
  const auto n = static_cast<std::size_t>(g.points_per_axis());
  std::vector<cplx> h(g.size());
  if (g.dim() == 1) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = maps[0].iu[j], b = maps[0].iv[j];
      if (a >= 0 && b >= 0) h[j] = u[static_cast<std::size_t>(a)] * std::conj(v[static_cast<std::size_t>(b)]);
    }
    return h;
  }
  for (std::size_t j0 = 0; j0 < n; ++j0) {
    const int a0 = maps[0].iu[j0], b0 = maps[0].iv[j0];
    if (a0 < 0 || b0 < 0) continue;
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const int a1 = maps[1].iu[j1], b1 = maps[1].iv[j1];
      if (a1 < 0 || b1 < 0) continue;
      h[j0 * n + j1] = u[static_cast<std::size_t>(a0) * n + static_cast<std::size_t>(a1)] *
                       std::conj(v[static_cast<std::size_t>(b0) * n + static_cast<std::size_t>(b1)]);
    }
  }
  return h;
}

// Maps for u(t + m) conj(v(t - m)) on the signal lattice (m in samples).
AxisMap symmetric_map(int n, int m) {
  AxisMap a{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j) {
    a.iu[static_cast<std::size_t>(j)] = clip(j + m, n);
    a.iv[static_cast<std::size_t>(j)] = clip(j - m, n);
  }
  return a;
}

std::array<AxisMap, 2> ambiguity_maps(const Grid& g, std::size_t x_flat) {
  const int n = g.points_per_axis();
  const auto idx = ambiguity_x_grid(g).axis_indices(x_flat);
  std::array<AxisMap, 2> maps;
  for (int j = 0; j < g.dim(); ++j) maps[static_cast<std::size_t>(j)] = symmetric_map(n, idx[static_cast<std::size_t>(j)] - n / 2);
  return maps;
}

Surface assemble(const Grid& xg, const Grid& yg, std::size_t rows,
                 const std::function<std::vector<cplx>(std::size_t)>& row) {
  const std::size_t width = yg.size();
  std::vector<cplx> samples(rows * width);
  parallel_for(rows, [&](std::size_t r) {
    const auto values = row(r);
    std::copy(values.begin(), values.end(), samples.begin() + static_cast<std::ptrdiff_t>(r * width));
  });
  return Surface(xg, yg, std::move(samples));
}

}  // namespace

Grid ambiguity_x_grid(const Grid& g) { return Grid(g.dim(), 2.0 * g.half_extent(), g.points_per_axis()); }

Grid wigner_y_grid(const Grid& g) {
  return Grid(g.dim(), g.points_per_axis() / (8.0 * g.half_extent()), g.points_per_axis());
}

Signal cross_section(const Signal& u, const Signal& v, std::span<const double> x) {
  require(u.grid() == v.grid(), "cross_section: u and v must share a grid");
  const Grid& g = u.grid();
  require(static_cast<int>(x.size()) == g.dim(), "cross_section: x has wrong length");
  const auto flat = lattice_flat(ambiguity_x_grid(g), x);
  if (!flat) {
    // Beyond the x-lattice box the kernel has empty support; off-lattice x is an error.
    for (int j = 0; j < g.dim(); ++j) {
      const double half = x[static_cast<std::size_t>(j)] / (2.0 * g.spacing());
      if (std::abs(half - std::round(half)) > 1e-9 * std::max(1.0, std::abs(half)))
        throw_precondition("cross_section: x must be an even multiple of the spacing");
    }
    return Signal::zeros(g);
  }
  return Signal(g, kernel(u, v, ambiguity_maps(g, *flat)));
}

std::vector<cplx> ambiguity_row(const Signal& u, const Signal& v, std::size_t x_flat) {
  const Grid& g = u.grid();
  auto h = kernel(u, v, ambiguity_maps(g, x_flat));
  continuous_dft(h, g.dim(), g.points_per_axis(), g.spacing(), -1);
  return h;
}

Surface ambiguity(const Signal& u, const Signal& v) {
  check_pair(u, v);
  const Grid& g = u.grid();
  const Grid xg = ambiguity_x_grid(g);
  return assemble(xg, g.dual(), xg.size(), [&](std::size_t r) { return ambiguity_row(u, v, r); });
}

Surface stft(const Signal& u, const Signal& v) {
  check_pair(u, v);
  const Grid& g = u.grid();
  const int n = g.points_per_axis();
  const Grid xg = ambiguity_x_grid(g);
  return assemble(xg, g.dual(), xg.size(), [&](std::size_t r) {
    const auto idx = xg.axis_indices(r);
    std::array<AxisMap, 2> maps;
    for (int j = 0; j < g.dim(); ++j) {
      const int shift = 2 * (idx[static_cast<std::size_t>(j)] - n / 2);
      AxisMap& a = maps[static_cast<std::size_t>(j)];
      a.iu.resize(static_cast<std::size_t>(n));
      a.iv.resize(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) {
        a.iu[static_cast<std::size_t>(t)] = t;
        a.iv[static_cast<std::size_t>(t)] = clip(t - shift, n);
      }
    }
    auto h = kernel(u, v, maps);
    continuous_dft(h, g.dim(), n, g.spacing(), +1);
    return h;
  });
}

Surface wigner(const Signal& u, const Signal& v) {
  check_pair(u, v);
  const Grid& g = u.grid();
  const int n = g.points_per_axis();
  return assemble(g, wigner_y_grid(g), g.size(), [&](std::size_t r) {
    const auto idx = g.axis_indices(r);
    std::array<AxisMap, 2> maps;
    for (int j = 0; j < g.dim(); ++j) {
      const int x = idx[static_cast<std::size_t>(j)];
      AxisMap& a = maps[static_cast<std::size_t>(j)];
      a.iu.resize(static_cast<std::size_t>(n));
      a.iv.resize(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) {
        const int s = t - n / 2;
        a.iu[static_cast<std::size_t>(t)] = clip(x + s, n);
        a.iv[static_cast<std::size_t>(t)] = clip(x - s, n);
      }
    }
    auto h = kernel(u, v, maps);
    continuous_dft(h, g.dim(), n, 2.0 * g.spacing(), +1);
    return h;
  });
}

MoyalNorms moyal_norm(const Signal& u, const Signal& v) {
  require(u.grid() == v.grid(), "moyal_norm: u and v must share a grid");
  const Grid& g = u.grid();
  const Grid xg = ambiguity_x_grid(g);
  std::vector<double> row_sums(xg.size());
  parallel_for(xg.size(), [&](std::size_t r) {
    const auto row = ambiguity_row(u, v, r);
    std::vector<double> sq(row.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(row[i]);
    row_sums[r] = pairwise_sum(sq);
  });
  const double cell = xg.cell_volume() * g.dual().cell_volume();
  return {std::sqrt(cell * pairwise_sum(row_sums)), l2_norm(u) * l2_norm(v)};
}

}  // namespace tfu
