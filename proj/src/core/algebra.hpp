#pragma once

#include "core/types.hpp"

namespace gh::algebra {

/// Element a1 + a2 z d + a3 z̄ d̄ + a4 dd̄ of the four-dimensional span of
/// the rotation-invariant operators. Basis order is (1, z d, z̄ d̄, dd̄).
struct OperatorElement {
  Complex a1{};
  Complex a2{};
  Complex a3{};
  Complex a4{};

  friend bool operator==(const OperatorElement&, const OperatorElement&) = default;
};

OperatorElement operator+(const OperatorElement& x, const OperatorElement& y);
OperatorElement operator-(const OperatorElement& x, const OperatorElement& y);
OperatorElement operator*(Complex alpha, const OperatorElement& x);

/// q2 x d²/dx² + (q1c + q1l x) d/dx + q0 acting on functions of x = |z|².
struct ODEOperator {
  Complex q2{};
  Complex q1c{};
  Complex q1l{};
  Complex q0{};

  friend bool operator==(const ODEOperator&, const ODEOperator&) = default;
};

ODEOperator operator+(const ODEOperator& x, const ODEOperator& y);
ODEOperator operator*(Complex alpha, const ODEOperator& x);

struct EquivalenceWitness {
  bool equivalent = false;
  Complex mu{};
};

/// Coordinates (-r, -s, -t, 1) of M_{s,t,r}.
OperatorElement from_params(const Params& params);

/// [D1, D2] = gamma dd̄ with gamma = a4 (b2 + b3) - b4 (a2 + a3).
OperatorElement bracket(const OperatorElement& d1, const OperatorElement& d2);

/// The ODE operator T with D(z^m f(|z|²)) = z^m (T f)(|z|²), m >= 0:
///   q2 = a4, q1c = a4 (m+1), q1l = a2 + a3, q0 = a1 + a2 m.
ODEOperator lambda_map(const OperatorElement& d, int m);

/// Signed version. For m < 0 the input is f(|z|²) z̄^|m|, whose image is the
/// m >= 0 map with the z d and z̄ d̄ coefficients interchanged.
ODEOperator lambda_map_signed(const OperatorElement& d, int m);

/// A - m = (-m, 1, -1, 0), where A = z d - z̄ d̄ is the angular derivative.
/// Spans the kernel of lambda_map(., m).
OperatorElement kernel_basis(int m);

/// Whether v - w is a multiple mu of kernel_basis(m). mu is read from the
/// z d coordinate; the other three coordinates are checked to within
/// rel_tol relative to the size of v and w.
EquivalenceWitness equivalent(const OperatorElement& v, const OperatorElement& w,
                              int m, double rel_tol = 1e-12);

/// Parameters of the dilated problem: v(z) = u(rho z) solves M_{rho² (s,t,r)}
/// on the unit disc when u solves M_{s,t,r} on the disc of radius rho.
Params rescale_params(const Params& params, double rho);

}  // namespace gh::algebra
