#include "core/verification.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/series.hpp"

namespace gh::verification {

namespace {

void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
}

// Two solutions of the radial ODE advanced together: (y1, y1', y2, y2').
// Extended precision: W = y1 y2' - y1' y2 shrinks like x^{-(m+1)} while the
// products do not, so the cancellation costs about (m+1) log10(x1/x0) digits.
using LComplex = std::complex<long double>;
using State = std::array<LComplex, 4>;

struct RadialOde {
  LComplex a;      // r + s m
  LComplex b;      // s + t
  long double c;   // m + 1

  State operator()(long double x, const State& y) const {
    const auto second = [&](LComplex v, LComplex dv) {
      return (a * v - (c - b * x) * dv) / x;
    };
    return {y[1], second(y[0], y[1]), y[3], second(y[2], y[3])};
  }
};

State axpy(const State& y, long double h, const State& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

LComplex widen(Complex z) { return {z.real(), z.imag()}; }

struct Deviation {
  double max_rel = 0.0;
  double cancellation = 1.0;  // max (|y1 y2'| + |y1' y2|) / |W| along the path
};

Deviation integrate(const Params& params, int m, double x0, double x1, int steps,
                    InitialValue first, InitialValue second) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "mode index must be nonnegative");
  if (!(x0 > 0.0 && x1 > x0))
    throw Error(ErrorCode::InvalidArgument, "wronskian: need 0 < x0 < x1");
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "wronskian: steps must be positive");

  const RadialOde ode{widen(params.r + params.s * static_cast<double>(m)),
                      widen(params.s + params.t), m + 1.0L};
  Deviation out;
  const auto weighted = [&](long double x, const State& y) {
    const LComplex p = y[0] * y[3], q = y[1] * y[2];
    const LComplex w = p - q;
    if (w != LComplex{})
      out.cancellation = std::max(
          out.cancellation, static_cast<double>((std::abs(p) + std::abs(q)) / std::abs(w)));
    return w * std::pow(x, static_cast<long double>(m + 1)) * std::exp(-ode.b * x);
  };

  State y{widen(first.y), widen(first.dy), widen(second.y), widen(second.dy)};
  const LComplex reference = weighted(x0, y);
  if (reference == LComplex{}) return {};

  const long double h = (static_cast<long double>(x1) - x0) / steps;
  for (int i = 0; i < steps; ++i) {
    const long double x = x0 + i * h;
    const State k1 = ode(x, y);
    const State k2 = ode(x + 0.5L * h, axpy(y, 0.5L * h, k1));
    const State k3 = ode(x + 0.5L * h, axpy(y, 0.5L * h, k2));
    const State k4 = ode(x + h, axpy(y, h, k3));
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] += (h / 6.0L) * (k1[j] + 2.0L * (k2[j] + k3[j]) + k4[j]);
    const long double xn = x0 + (i + 1) * h;
    out.max_rel = std::max(out.max_rel,
                           static_cast<double>(std::abs(weighted(xn, y) / reference - 1.0L)));
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (!(radius > 0.0 && radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "grid radius must lie in (0, 1)");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid size n must be positive");
}

std::vector<Complex> GridSpec::points(double h) const {
  validate();
  const double exclude = exclude_origin_radius < 0.0 ? 2.0 * h : exclude_origin_radius;
  const double step = n > 1 ? 2.0 * radius / (n - 1) : 0.0;
  std::vector<Complex> pts;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex z = n > 1 ? Complex{-radius + i * step, -radius + j * step}
                              : Complex{};
      const double az = std::abs(z);
      if (az > radius * (1.0 + 1e-12) || az < exclude) continue;
      pts.push_back(z);
    }
  }
  return pts;
}

Wirtinger wirtinger_fd(const Sampler& u, Complex z, double h) {
  require_step(h);
  const Complex ih{0.0, h};
  const Complex center = u(z);
  const Complex east = u(z + h);
  const Complex west = u(z - h);
  const Complex north = u(z + ih);
  const Complex south = u(z - ih);
  const Complex dx = (east - west) / (2.0 * h);
  const Complex dy = (north - south) / (2.0 * h);
  const Complex laplacian = (east + west + north + south - 4.0 * center) / (h * h);
  const Complex i{0.0, 1.0};
  return {0.5 * (dx - i * dy), 0.5 * (dx + i * dy), 0.25 * laplacian};
}

Complex apply_operator_fd(const algebra::OperatorElement& op, const Sampler& u,
                          Complex z, double h) {
  const Wirtinger w = wirtinger_fd(u, z, h);
  return op.a1 * u(z) + op.a2 * z * w.d + op.a3 * std::conj(z) * w.dbar +
         op.a4 * w.ddbar;
}

ResidualReport operator_residual(const algebra::OperatorElement& op, const Sampler& u,
                                 const GridSpec& grid, double h) {
  require_step(h);
  ResidualReport report;
  report.fd_step = h;
  for (const Complex z : grid.points(h)) {
    const double value = std::abs(apply_operator_fd(op, u, z, h));
    if (report.points_checked == 0 || value > report.max_abs) {
      report.max_abs = value;
      report.argmax_point = z;
    }
    ++report.points_checked;
  }
  if (report.points_checked == 0)
    throw Error(ErrorCode::InvalidArgument, "residual grid contains no points");
  return report;
}

ResidualReport residual_M(const Params& params, const Sampler& u, const GridSpec& grid,
                          double h) {
  return operator_residual(algebra::from_params(params), u, grid, h);
}

std::vector<Complex> p_coefficients(const Params& params, int m, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "coefficient count must be positive");
  const series::GArgs g = series::p_args(params, m);
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(count));
  double factorial = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) factorial *= k;
    const auto n = static_cast<unsigned>(k);
    coeffs.push_back(series::poch(g.a, g.b, n) /
                     (series::poch(g.c, g.d, n) * factorial));
  }
  return coeffs;
}

double ode_recurrence_residual(const Params& params, int m,
                               std::span<const Complex> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "no coefficients given");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "mode index must be nonnegative");
  const Complex a = params.r + params.s * static_cast<double>(m);
  const Complex b = params.s + params.t;
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    const double kd = static_cast<double>(k);
    const Complex lhs = (kd + 1.0) * (kd + m + 1.0) * coeffs[k + 1];
    const Complex rhs = (a + kd * b) * coeffs[k];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double wronskian_deviation(const Params& params, int m, double x0, double x1, int steps,
                           InitialValue first, InitialValue second) {
  return integrate(params, m, x0, x1, steps, first, second).max_rel;
}

double wronskian_check(const Params& params, int m, double x0, double x1, int steps) {
  const Deviation fine = integrate(params, m, x0, x1, steps, {Complex{1.0}, Complex{}},
                                   {Complex{}, Complex{1.0}});
  if (steps >= 2) {
    const Deviation coarse = integrate(params, m, x0, x1, steps / 2,
                                       {Complex{1.0}, Complex{}}, {Complex{}, Complex{1.0}});
    // Rounding in W grows with the cancellation factor and like sqrt(steps).
    const double floor = 64.0 * std::numeric_limits<long double>::epsilon() *
                         fine.cancellation * std::sqrt(static_cast<double>(steps));
    if (fine.max_rel > floor && fine.max_rel >= coarse.max_rel) {
      std::ostringstream os;
      os << "wronskian: deviation " << fine.max_rel << " at " << steps
         << " steps did not shrink from " << coarse.max_rel << " at " << steps / 2
         << " (rounding floor " << floor << ")";
      throw Error(ErrorCode::StepTooCoarse, os.str());
    }
  }
  return fine.max_rel;
}

Complex homogeneous_input(int m, std::span<const Complex> f_poly, Complex z) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "mode index must be nonnegative");
  const double x = std::norm(z);
  Complex f{};
  for (auto it = f_poly.rbegin(); it != f_poly.rend(); ++it) f = f * x + *it;
  Complex zm{1.0};
  for (int i = 0; i < m; ++i) zm *= z;
  return zm * f;
}

Complex apply_ode_to_polynomial(const algebra::ODEOperator& T,
                                std::span<const Complex> f_poly, double x) {
  Complex f{}, df{}, d2f{};
  for (auto it = f_poly.rbegin(); it != f_poly.rend(); ++it) {
    d2f = d2f * x + 2.0 * df;
    df = df * x + f;
    f = f * x + *it;
  }
  return T.q2 * x * d2f + (T.q1c + T.q1l * x) * df + T.q0 * f;
}

double action_difference(const algebra::OperatorElement& v,
                         const algebra::OperatorElement& w, int m,
                         std::span<const Complex> f_poly, const GridSpec& grid,
                         double h) {
  require_step(h);
  const std::vector<Complex> poly(f_poly.begin(), f_poly.end());
  const Sampler u = [m, poly](Complex z) { return homogeneous_input(m, poly, z); };
  double worst = 0.0;
  for (const Complex z : grid.points(h)) {
    const Complex diff = apply_operator_fd(v, u, z, h) - apply_operator_fd(w, u, z, h);
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

double equivalence_action_check(const algebra::OperatorElement& v,
                                const algebra::OperatorElement& w, int m,
                                std::span<const Complex> f_poly, const GridSpec& grid,
                                double h) {
  if (!algebra::equivalent(v, w, m).equivalent) {
    std::ostringstream os;
    os << "operators are not equivalent modulo A - " << m;
    throw Error(ErrorCode::NotEquivalent, os.str());
  }
  return action_difference(v, w, m, f_poly, grid, h);
}

}  // namespace gh::verification
