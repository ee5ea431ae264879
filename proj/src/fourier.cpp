#include "tfu/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tfu/errors.hpp"

namespace tfu {
namespace {

// Plans are created once per (n, sign) under a lock; fftw_execute_dft on
// distinct buffers is thread safe.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto it = plans.find({n, sign});
  if (it != plans.end()) return it->second;
  std::vector<cplx> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
  fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()),
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(std::make_pair(n, sign), p);
  return p;
}

}  // namespace

void continuous_dft_axis(std::span<cplx> data, std::span<const int> shape, int axis, double spacing,
                         int sign) {
  const auto rank = static_cast<int>(shape.size());
  require(axis >= 0 && axis < rank, "continuous_dft: axis out of range");
  const int n = shape[static_cast<std::size_t>(axis)];
  require(n % 2 == 0, "continuous_dft: axis length must be even");
  std::size_t outer = 1, inner = 1;
  for (int k = 0; k < axis; ++k) outer *= static_cast<std::size_t>(shape[static_cast<std::size_t>(k)]);
  for (int k = axis + 1; k < rank; ++k) inner *= static_cast<std::size_t>(shape[static_cast<std::size_t>(k)]);
  require(outer * inner * static_cast<std::size_t>(n) == data.size(), "continuous_dft: shape does not match data");

  fftw_plan plan = plan_for(n, sign);
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t half = un / 2;
  std::vector<cplx> in(un), out(un);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t base = o * un * inner + i;
      for (std::size_t k = 0; k < un; ++k) in[(k + half) % un] = data[base + k * inner];
      fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
      for (std::size_t j = 0; j < un; ++j) data[base + j * inner] = spacing * out[(j + half) % un];
    }
  }
}

void continuous_dft(std::span<cplx> data, int dim, int n, double spacing, int sign) {
  std::vector<int> shape(static_cast<std::size_t>(dim), n);
  for (int axis = 0; axis < dim; ++axis) continuous_dft_axis(data, shape, axis, spacing, sign);
}

Signal fourier(const Signal& s) {
  const Grid& g = s.grid();
  std::vector<cplx> data(s.samples().begin(), s.samples().end());
  continuous_dft(data, g.dim(), g.points_per_axis(), g.spacing(), -1);
  Signal out(g.dual(), std::move(data));
  if (s.closed_form()) out = out.with_closed_form(s.closed_form()->fourier());
  return out;
}

Signal inverse_fourier(const Signal& s) {
  const Grid& g = s.grid();
  std::vector<cplx> data(s.samples().begin(), s.samples().end());
  continuous_dft(data, g.dim(), g.points_per_axis(), g.spacing(), +1);
  Signal out(g.dual(), std::move(data));
  if (s.closed_form()) out = out.with_closed_form(s.closed_form()->inverse_fourier());
  return out;
}

}  // namespace tfu
