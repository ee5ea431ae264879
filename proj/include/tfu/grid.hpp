#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tfu {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform sampling lattice of the centered box [-L, L)^d with n points per
/// axis. Axis coordinates are x_k = -L + k*spacing, so coordinate 0 sits at
/// index n/2. Flat indices are row-major (last axis fastest).
class Grid {
 public:
  /// Validates d in {1,2}, n even and >= 8, L > 0.
  Grid(int dim, double half_extent, int points_per_axis);

  int dim() const { return dim_; }
  double half_extent() const { return half_extent_; }
  int points_per_axis() const { return n_; }
  double spacing() const { return spacing_; }
  std::size_t size() const;
  double cell_volume() const;

  double coordinate(int k) const { return -half_extent_ + k * spacing_; }
  /// Axis indices of a flat index.
  std::array<int, 2> axis_indices(std::size_t flat) const;
  std::size_t flat_index(std::span<const int> axis_indices) const;
  /// Coordinates of a flat index, written to out[0..dim).
  void point(std::size_t flat, std::span<double> out) const;
  std::array<double, 2> point(std::size_t flat) const;

  /// Axis index whose coordinate equals `value` to within 1e-9 spacings, or -1.
  int lattice_index(double value) const;

  /// Lattice of the continuous Fourier transform: same n, spacing 1/(2L).
  Grid dual() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim_ == b.dim_ && a.n_ == b.n_ && a.half_extent_ == b.half_extent_;
  }

 private:
  int dim_;
  double half_extent_;
  int n_;
  double spacing_;
};

Grid make_grid(int dim, double half_extent, int points_per_axis);

/// Default grids: d=1 -> (L=8, n=256); d=2 -> (L=6, n=128).
Grid default_grid(int dim);

/// Default radii for truncated functionals: 8 values geometric from L/4 to L.
std::vector<double> default_radii(double half_extent);

}  // namespace tfu
