#include "tfu/grid.hpp"

#include <cmath>
#include <string>

#include "tfu/errors.hpp"

namespace tfu {

Grid::Grid(int dim, double half_extent, int points_per_axis)
    : dim_(dim), half_extent_(half_extent), n_(points_per_axis), spacing_(0.0) {
  if (dim != 1 && dim != 2) throw_precondition("grid: unsupported dimension " + std::to_string(dim));
  if (!(half_extent > 0.0) || !std::isfinite(half_extent))
    throw_precondition("grid: half extent must be positive");
  if (points_per_axis < 8) throw_precondition("grid: need at least 8 points per axis");
  if (points_per_axis % 2 != 0)
    throw_precondition("grid: points per axis must be even, got " + std::to_string(points_per_axis));
  spacing_ = 2.0 * half_extent / n_;
  // Keep spacing * n == 2L exact in the stored metadata.
  half_extent_ = spacing_ * n_ / 2.0;
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int j = 0; j < dim_; ++j) s *= static_cast<std::size_t>(n_);
  return s;
}

double Grid::cell_volume() const { return std::pow(spacing_, dim_); }

std::array<int, 2> Grid::axis_indices(std::size_t flat) const {
  if (dim_ == 1) return {static_cast<int>(flat), 0};
  return {static_cast<int>(flat / n_), static_cast<int>(flat % n_)};
}

std::size_t Grid::flat_index(std::span<const int> idx) const {
  std::size_t flat = 0;
  for (int j = 0; j < dim_; ++j) flat = flat * n_ + static_cast<std::size_t>(idx[j]);
  return flat;
}

void Grid::point(std::size_t flat, std::span<double> out) const {
  const auto idx = axis_indices(flat);
  for (int j = 0; j < dim_; ++j) out[j] = coordinate(idx[j]);
}

std::array<double, 2> Grid::point(std::size_t flat) const {
  std::array<double, 2> p{0.0, 0.0};
  point(flat, p);
  return p;
}

int Grid::lattice_index(double value) const {
  const double k = (value + half_extent_) / spacing_;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9) return -1;
  if (r < 0 || r >= n_) return -1;
  return static_cast<int>(r);
}

Grid Grid::dual() const { return Grid(dim_, n_ / (4.0 * half_extent_), n_); }

Grid make_grid(int dim, double half_extent, int points_per_axis) {
  return Grid(dim, half_extent, points_per_axis);
}

Grid default_grid(int dim) {
  if (dim == 1) return Grid(1, 8.0, 256);
  return Grid(dim, 6.0, 128);
}

std::vector<double> default_radii(double half_extent) {
  std::vector<double> r(8);
  const double lo = half_extent / 4.0;
  for (int i = 0; i < 8; ++i) r[i] = lo * std::pow(4.0, i / 7.0);
  r.back() = half_extent;
  return r;
}

}  // namespace tfu
