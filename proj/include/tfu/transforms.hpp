#pragma once

#include <span>
#include <vector>

#include "tfu/signal.hpp"
#include "tfu/surface.hpp"

namespace tfu {

/// x-lattice of ambiguity and STFT surfaces: even multiples of the signal
/// spacing in [-2L, 2L), n points per axis.
Grid ambiguity_x_grid(const Grid& signal_grid);
/// x-lattice of Wigner surfaces: the signal grid itself.
/// y-lattice: spacing 1/(4L), n points per axis.
Grid wigner_y_grid(const Grid& signal_grid);

/// h_x(t) = u(t + x/2) conj(v(t - x/2)), zero outside the box. x must be an
/// even multiple of the spacing.
Signal cross_section(const Signal& u, const Signal& v, std::span<const double> x);

/// One x-slice of A(u,v): values on the dual grid for the x-lattice point
/// with flat index x_flat in ambiguity_x_grid(). Basis for streaming consumers.
std::vector<cplx> ambiguity_row(const Signal& u, const Signal& v, std::size_t x_flat);

/// A(u,v)(x,y) = integral u(t + x/2) conj(v(t - x/2)) exp(-2 i pi <y,t>) dt on
/// ambiguity_x_grid() × grid.dual(). d=2 surfaces are capped at n = 64.
Surface ambiguity(const Signal& u, const Signal& v);

/// S_v u(x,y) = integral u(t) conj(v(t - x)) exp(2 i pi <t,y>) dt on the
/// same lattices as ambiguity(). S_v u(x,y) = exp(i pi <x,y>) A(u,v)(x,-y).
Surface stft(const Signal& u, const Signal& v);

/// W(u,v)(x,y) = integral u(x + t/2) conj(v(x - t/2)) exp(2 i pi <y,t>) dt
/// on grid × wigner_y_grid(), with t on even multiples of the spacing.
Surface wigner(const Signal& u, const Signal& v);

struct MoyalNorms {
  double surface_norm;
  double product_norm;
};

/// ‖A(u,v)‖ over the surface lattice against ‖u‖‖v‖.
MoyalNorms moyal_norm(const Signal& u, const Signal& v);

}  // namespace tfu
