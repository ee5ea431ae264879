#include "tfu/surface.hpp"

#include <cmath>

#include "tfu/errors.hpp"
#include "tfu/parallel.hpp"

namespace tfu {

Surface::Surface(Grid x_grid, Grid y_grid, std::vector<cplx> samples)
    : x_grid_(std::move(x_grid)), y_grid_(std::move(y_grid)), samples_(std::move(samples)) {
  require(x_grid_.dim() == y_grid_.dim(), "surface: grid dimensions differ");
  require(samples_.size() == x_grid_.size() * y_grid_.size(), "surface: sample count does not match the grids");
  for (const auto& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw_precondition("surface: non-finite sample");
}

std::optional<std::size_t> lattice_flat(const Grid& g, std::span<const double> p) {
  std::array<int, 2> idx{0, 0};
  for (int j = 0; j < g.dim(); ++j) {
    const int k = g.lattice_index(p[static_cast<std::size_t>(j)]);
    if (k < 0) return std::nullopt;
    idx[static_cast<std::size_t>(j)] = k;
  }
  return g.flat_index(std::span<const int>(idx.data(), static_cast<std::size_t>(g.dim())));
}

std::optional<cplx> Surface::value_at(std::span<const double> x, std::span<const double> y) const {
  const auto ix = lattice_flat(x_grid_, x);
  const auto iy = lattice_flat(y_grid_, y);
  if (!ix || !iy) return std::nullopt;
  return at(*ix, *iy);
}

double Surface::l2_norm() const {
  std::vector<double> sq(samples_.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(samples_[i]);
  return std::sqrt(x_grid_.cell_volume() * y_grid_.cell_volume() * pairwise_sum(sq));
}

}  // namespace tfu
