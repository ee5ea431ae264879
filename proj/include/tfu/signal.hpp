#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tfu/closed_form.hpp"
#include "tfu/grid.hpp"

namespace tfu {

/// Double-precision complex samples of a function on a Grid, row-major.
/// A signal produced from an exact generator also carries that generator as
/// a ClosedForm; operators that have an exact image propagate it.
class Signal {
 public:
  /// Requires samples.size() == grid.size() and every sample finite.
  Signal(Grid grid, std::vector<cplx> samples);

  static Signal zeros(const Grid& grid);
  /// Samples `form` at the grid points and keeps it attached.
  static Signal from_closed_form(const Grid& grid, ClosedForm form);

  const Grid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  cplx operator[](std::size_t i) const { return samples_[i]; }

  /// Null when the signal has no exact generator.
  const ClosedForm* closed_form() const { return closed_.get(); }
  Signal with_closed_form(ClosedForm form) const;
  Signal without_closed_form() const;

  Signal scaled(cplx factor) const;
  bool is_zero() const;

  friend Signal operator+(const Signal& a, const Signal& b);

 private:
  Grid grid_;
  std::vector<cplx> samples_;
  std::shared_ptr<const ClosedForm> closed_;
};

}  // namespace tfu
