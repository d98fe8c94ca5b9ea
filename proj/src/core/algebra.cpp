#include "core/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gh::algebra {

namespace {

void require_nonnegative(int m) {
  if (m < 0) {
    std::ostringstream os;
    os << "mode index must be nonnegative, got " << m;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

double max_abs(const OperatorElement& x) {
  return std::max({std::abs(x.a1), std::abs(x.a2), std::abs(x.a3), std::abs(x.a4)});
}

}  // namespace

OperatorElement operator+(const OperatorElement& x, const OperatorElement& y) {
  return {x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.a4 + y.a4};
}

OperatorElement operator-(const OperatorElement& x, const OperatorElement& y) {
  return {x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3, x.a4 - y.a4};
}

OperatorElement operator*(Complex alpha, const OperatorElement& x) {
  return {alpha * x.a1, alpha * x.a2, alpha * x.a3, alpha * x.a4};
}

ODEOperator operator+(const ODEOperator& x, const ODEOperator& y) {
  return {x.q2 + y.q2, x.q1c + y.q1c, x.q1l + y.q1l, x.q0 + y.q0};
}

ODEOperator operator*(Complex alpha, const ODEOperator& x) {
  return {alpha * x.q2, alpha * x.q1c, alpha * x.q1l, alpha * x.q0};
}

OperatorElement from_params(const Params& params) {
  return {-params.r, -params.s, -params.t, Complex{1.0}};
}

OperatorElement bracket(const OperatorElement& d1, const OperatorElement& d2) {
  // First-order terms commute and [dd̄, z d] = [dd̄, z̄ d̄] = dd̄.
  const Complex gamma = d1.a4 * (d2.a2 + d2.a3) - d2.a4 * (d1.a2 + d1.a3);
  return {Complex{}, Complex{}, Complex{}, gamma};
}

ODEOperator lambda_map(const OperatorElement& d, int m) {
  require_nonnegative(m);
  const double md = m;
  return {d.a4, d.a4 * (md + 1.0), d.a2 + d.a3, d.a1 + d.a2 * md};
}

ODEOperator lambda_map_signed(const OperatorElement& d, int m) {
  if (m >= 0) return lambda_map(d, m);
  return lambda_map({d.a1, d.a3, d.a2, d.a4}, -m);
}

OperatorElement kernel_basis(int m) {
  require_nonnegative(m);
  return {Complex{-static_cast<double>(m)}, Complex{1.0}, Complex{-1.0}, Complex{}};
}

EquivalenceWitness equivalent(const OperatorElement& v, const OperatorElement& w,
                              int m, double rel_tol) {
  const OperatorElement diff = v - w;
  const OperatorElement basis = kernel_basis(m);
  const Complex mu = diff.a2;
  const OperatorElement residual = diff - mu * basis;
  const double scale = std::max({max_abs(v), max_abs(w), 1.0}) * (1.0 + m);
  if (max_abs(residual) <= rel_tol * scale) return {true, mu};
  return {false, Complex{}};
}

Params rescale_params(const Params& params, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw Error(ErrorCode::InvalidArgument, "rescale_params: rho must be positive");
  const double f = rho * rho;
  return {f * params.s, f * params.t, f * params.r};
}

}  // namespace gh::algebra
