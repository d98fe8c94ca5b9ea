#pragma once

#include <span>
#include <vector>

#include "core/algebra.hpp"
#include "core/solutions.hpp"
#include "core/types.hpp"

namespace gh::verification {

using solutions::Sampler;

/// n x n Cartesian lattice on [-radius, radius]^2. Points with |z| > radius or
/// |z| < exclude_origin_radius are skipped; a negative exclusion radius means
/// "twice the finite-difference step".
struct GridSpec {
  double radius = 0.8;
  int n = 41;
  double exclude_origin_radius = -1.0;

  void validate() const;
  std::vector<Complex> points(double h) const;
};

struct ResidualReport {
  double max_abs = 0.0;
  Complex argmax_point{};
  int points_checked = 0;
  double fd_step = 0.0;
};

struct Wirtinger {
  Complex d{};      // du/dz
  Complex dbar{};   // du/dz̄
  Complex ddbar{};  // d²u/dz dz̄ = Laplacian / 4
};

/// Central differences in x and y and the five-point Laplacian; O(h²).
Wirtinger wirtinger_fd(const Sampler& u, Complex z, double h);

/// (a1 + a2 z d + a3 z̄ d̄ + a4 dd̄) u at z, from wirtinger_fd.
Complex apply_operator_fd(const algebra::OperatorElement& op, const Sampler& u,
                          Complex z, double h);

/// Max of |D u| over the grid.
ResidualReport operator_residual(const algebra::OperatorElement& op, const Sampler& u,
                                 const GridSpec& grid, double h);

/// Max of |dd̄u - s z du - t z̄ d̄u - r u| over the grid.
ResidualReport residual_M(const Params& params, const Sampler& u, const GridSpec& grid,
                          double h);

/// Power-series coefficients f_k = (r+sm, s+t)_k / ((m+1)_k k!) of
/// P(r+sm, s+t | m+1; .), computed from Pochhammer products.
std::vector<Complex> p_coefficients(const Params& params, int m, int count);

/// max_k |(k+1)(k+m+1) f_{k+1} - (r + sm + k(s+t)) f_k| over the given
/// coefficients; zero iff sum f_k x^k solves
///   x y'' + (m+1 - (s+t) x) y' - (r+sm) y = 0
/// through order K-1.
double ode_recurrence_residual(const Params& params, int m,
                               std::span<const Complex> coeffs);

/// Initial data (y, y') at x0 for one solution of the radial ODE.
struct InitialValue {
  Complex y{};
  Complex dy{};
};

/// Fixed-step RK4 integration of two solutions of the radial ODE over
/// [x0, x1]. Returns max |W(x) w(x) / (W(x0) w(x0)) - 1| with weight
/// w(x) = x^{m+1} exp(-(s+t) x), or 0 when W(x0) = 0.
double wronskian_deviation(const Params& params, int m, double x0, double x1, int steps,
                           InitialValue first = {Complex{1.0}, Complex{}},
                           InitialValue second = {Complex{}, Complex{1.0}});

/// wronskian_deviation with the canonical initial data. Also integrates with
/// half as many steps and throws StepTooCoarse if the deviation did not shrink
/// while still above the rounding floor.
double wronskian_check(const Params& params, int m, double x0, double x1, int steps);

/// u(z) = z^m f(|z|²) for m >= 0 and polynomial f (coefficients low to high).
Complex homogeneous_input(int m, std::span<const Complex> f_poly, Complex z);

/// (T f)(x) for polynomial f, evaluated exactly from its derivatives.
Complex apply_ode_to_polynomial(const algebra::ODEOperator& T,
                                std::span<const Complex> f_poly, double x);

/// Max over the grid (origin excluded) of |M_v u - M_w u| with
/// u = z^m f(|z|²), both operators applied by finite differences.
double action_difference(const algebra::OperatorElement& v,
                         const algebra::OperatorElement& w, int m,
                         std::span<const Complex> f_poly, const GridSpec& grid,
                         double h);

/// action_difference for a pair that must be equivalent modulo
/// kernel_basis(m); throws NotEquivalent otherwise.
double equivalence_action_check(const algebra::OperatorElement& v,
                                const algebra::OperatorElement& w, int m,
                                std::span<const Complex> f_poly, const GridSpec& grid,
                                double h);

}  // namespace gh::verification
