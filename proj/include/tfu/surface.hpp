#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tfu/grid.hpp"

namespace tfu {

/// Complex samples of a bilinear transform on x_grid × y_grid. The flat
/// index is x_flat * y_grid.size() + y_flat.
class Surface {
 public:
  Surface(Grid x_grid, Grid y_grid, std::vector<cplx> samples);

  const Grid& x_grid() const { return x_grid_; }
  const Grid& y_grid() const { return y_grid_; }
  int dim() const { return x_grid_.dim(); }
  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  cplx at(std::size_t x_flat, std::size_t y_flat) const { return samples_[x_flat * y_grid_.size() + y_flat]; }

  /// Sample at coordinates (x, y) when both lie on the lattices.
  std::optional<cplx> value_at(std::span<const double> x, std::span<const double> y) const;

  /// Riemann-sum L² norm over both lattices.
  double l2_norm() const;

 private:
  Grid x_grid_;
  Grid y_grid_;
  std::vector<cplx> samples_;
};

/// Flat index of the lattice point with the given coordinates, if any.
std::optional<std::size_t> lattice_flat(const Grid& g, std::span<const double> p);

}  // namespace tfu
