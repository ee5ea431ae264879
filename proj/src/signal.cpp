#include "tfu/signal.hpp"

#include <cmath>

#include "tfu/errors.hpp"

namespace tfu {

Signal::Signal(Grid grid, std::vector<cplx> samples) : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) throw_precondition("signal: sample count does not match grid");
  for (const cplx& s : samples_) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw_precondition("signal: non-finite sample");
  }
}

Signal Signal::zeros(const Grid& grid) { return Signal(grid, std::vector<cplx>(grid.size())); }

Signal Signal::from_closed_form(const Grid& grid, ClosedForm form) {
  require(form.dim() == grid.dim(), "signal: closed form dimension does not match grid");
  std::vector<cplx> samples(grid.size());
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    grid.point(i, p);
    samples[i] = form(std::span<const double>(p.data(), static_cast<std::size_t>(grid.dim())));
  }
  Signal s(grid, std::move(samples));
  s.closed_ = std::make_shared<const ClosedForm>(std::move(form));
  return s;
}

Signal Signal::with_closed_form(ClosedForm form) const {
  Signal s = *this;
  s.closed_ = std::make_shared<const ClosedForm>(std::move(form));
  return s;
}

Signal Signal::without_closed_form() const {
  Signal s = *this;
  s.closed_.reset();
  return s;
}

Signal Signal::scaled(cplx factor) const {
  Signal s = *this;
  for (auto& v : s.samples_) v *= factor;
  if (closed_) s.closed_ = std::make_shared<const ClosedForm>(closed_->scaled(factor));
  return s;
}

bool Signal::is_zero() const {
  for (const cplx& v : samples_)
    if (v != cplx{}) return false;
  return true;
}

Signal operator+(const Signal& a, const Signal& b) {
  require(a.grid_ == b.grid_, "signal: grid mismatch");
  Signal s = a;
  for (std::size_t i = 0; i < s.samples_.size(); ++i) s.samples_[i] += b.samples_[i];
  if (a.closed_ && b.closed_)
    s.closed_ = std::make_shared<const ClosedForm>(*a.closed_ + *b.closed_);
  else
    s.closed_.reset();
  return s;
}

}  // namespace tfu
