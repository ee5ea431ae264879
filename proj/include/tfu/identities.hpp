#pragma once

#include "tfu/operators.hpp"
#include "tfu/signal.hpp"

namespace tfu {

/// Max pointwise errors of the covariance identities of the ambiguity
/// function, each compared on the lattice points shared by both sides:
///   shift:      A(S_a u, S_b v)(x,y) = exp(-i pi <a+b, y>) A(u,v)(x+b-a, y)
///   modulation: A(M_w1 u, M_w2 v)(x,y) = exp(i pi <w1+w2, x>) A(u,v)(x, y-w1+w2)
///   dilation:   A(D_l u, D_l v)(x,y) = A(u,v)(l x, y/l)
///   reflection: A(Zu, Zv)(x,y) = A(u,v)(-x,-y)
///   fourier:    A(u^, v^)(x,y) = A(u,v)(-y, x)
///   hermitian:  A(u,v)(x,y) = conj(A(v,u)(-x,-y))
struct Lem0Report {
  double shift = 0.0;
  double modulation = 0.0;
  double dilation = 0.0;
  double reflection = 0.0;
  double fourier = 0.0;
  double hermitian = 0.0;
  /// Dilation went through interpolation (signals without a closed form).
  bool dilation_lossy = false;
  /// Number of lattice points compared per identity, in the order above.
  std::array<std::size_t, 6> compared{};

  double max_error() const;
};

/// Requires shift_v - shift_u in 2Δℤ, (shift_u + shift_v)/2 in Δℤ and
/// modulation_u - modulation_v in (1/2L)ℤ componentwise.
Lem0Report verify_lem0(const Signal& u, const Signal& v, const OperatorParams& params);

/// Max pointwise error of an identity over the lattice points where both
/// sides are defined.
struct IdentityCheck {
  double max_error = 0.0;
  std::size_t compared = 0;
};
using FourambReport = IdentityCheck;

/// Transforms F(s,t) = A(u,v)(s,t) conj(A(v,w)(s,t)) over R^{2d} with the
/// kernel exp(2 i pi (<s,x> + <t,y>)) and compares with
/// A(u,v)(y,-x) conj(A(v,w)(y,-x)).
FourambReport verify_fouramb(const Signal& u, const Signal& v, const Signal& w);

/// Direct wigner(u,v) against 2^d A(u,Zv)(2x,-2y) on every Wigner sample whose
/// image lies on the ambiguity lattice.
IdentityCheck verify_wigner_relation(const Signal& u, const Signal& v);

}  // namespace tfu
