#pragma once

#include "core/types.hpp"

namespace gh::series {

/// Numerator base/step and denominator base/step of
///   G(a,b|c,d; z) = sum_k (a,b)_k / (c,d)_k * z^k / k!.
/// c + n*d must not vanish for any integer n >= 0.
struct GArgs {
  Complex a{};
  Complex b{};
  Complex c{};
  Complex d{};
};

/// Generalised Pochhammer symbol (x,y)_n = x (x+y) ... (x+(n-1)y); (x,y)_0 = 1.
Complex poch(Complex x, Complex y, unsigned n);

/// True when c + n*d = 0 for some integer n >= 0.
bool has_pole(Complex c, Complex d);

/// Arguments of P(r+sm, s+t | m+1; .) in G form.
GArgs p_args(const Params& params, int m);

/// Sums G by the term-ratio recurrence and stops once a certified bound on
/// the remaining tail drops below cfg.tol.
Complex eval_G(const GArgs& args, Complex z, const EvalConfig& cfg);

/// P(r+sm, s+t | m+1; z), m >= 0.
Complex eval_P(const Params& params, int m, Complex z, const EvalConfig& cfg);

/// Kummer's confluent hypergeometric function Phi(a, b, z) = 1F1(a; b; z).
Complex eval_kummer(Complex a, Complex b, Complex z, const EvalConfig& cfg);

/// Theta(m+1, z) = sum_k z^k / ((m+1)_k k!).
Complex eval_theta(int m, Complex z, const EvalConfig& cfg);

/// Modified Bessel function I_n(z) from its power series. Independent of
/// eval_G so that it can serve as a cross-check of eval_theta.
Complex eval_bessel_I(int n, Complex z, const EvalConfig& cfg);

/// n-th derivative of G in z, via G^(n) = (a,b)_n/(c,d)_n G(a+nb, b | c+nd, d; z).
Complex deriv_G(const GArgs& args, unsigned n, Complex z, const EvalConfig& cfg);

/// exp((|r| + |s| + |s+t|) |z|), a bound on |P(r+sm, s+t | m+1; z)| uniform in m.
double growth_bound(const Params& params, double abs_z);

/// max |P(r+sm, s+t | m+1; z) - exp(s z)| over the points of an
/// n_grid x n_grid lattice on [-radius, radius]^2 with |z| <= radius.
double asymptotic_gap(const Params& params, int m, double radius, int n_grid,
                      const EvalConfig& cfg);

}  // namespace gh::series
