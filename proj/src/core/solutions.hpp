#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace gh::solutions {

struct ModeCoefficient {
  int m = 0;
  Complex k{};
};

/// Finite surrogate for the root condition limsup |k_m|^(1/|m|) <= 1:
/// every coefficient must satisfy |k_m| <= bound * rho0^(-|m|), rho0 in (0, 1].
struct CoefficientBound {
  double bound = 1.0;
  double rho0 = 1.0;
};

/// A generalised harmonic function given by finitely many modes
///   u = sum_{m>=0} k_m P(r+sm, s+t | m+1; |z|²) z^m
///     + sum_{m<0}  k_m P(r+t|m|, t+s | |m|+1; |z|²) z̄^|m|.
class SolutionSeries {
 public:
  SolutionSeries() = default;
  SolutionSeries(const Params& params, const EvalConfig& cfg);

  /// Throws InvalidArgument if m is already present.
  void add_mode(int m, Complex k);

  /// Throws InvalidArgument naming the first coefficient that violates the bound.
  void check_bound(const CoefficientBound& bound) const;

  const Params& params() const { return params_; }
  const EvalConfig& config() const { return cfg_; }
  const std::vector<ModeCoefficient>& modes() const { return modes_; }

 private:
  Params params_;
  EvalConfig cfg_;
  std::vector<ModeCoefficient> modes_;
};

using Sampler = std::function<Complex(Complex)>;
using PolarSampler = std::function<Complex(double rho, double theta)>;

/// Values u(rho e^{2 pi i j / N}), j = 0..N-1. N must be a power of two and
/// 0 < rho < 1.
struct CircleSamples {
  double rho = 0.5;
  std::vector<Complex> values;

  void validate() const;
};

struct Extraction {
  std::vector<ModeCoefficient> coefficients;
  bool alias_warning = false;  // some requested |m| >= N/2
};

/// Single homogeneous mode of weight m; |z| < 1.
Complex mode_value(const Params& params, int m, Complex k, Complex z,
                   const EvalConfig& cfg);

Complex eval_solution(const SolutionSeries& sol, Complex z);

/// k_m = d^m u(0)/m! from d_plus[m], m = 0..M, and k_{-m} = d̄^m u(0)/m!
/// from d_minus[m-1], m = 1..M'.
SolutionSeries modes_from_taylor(const Params& params,
                                 std::span<const Complex> d_plus,
                                 std::span<const Complex> d_minus,
                                 const EvalConfig& cfg);

std::vector<Complex> sample_circle(const Sampler& sampler, double rho, int n);

/// Raw Fourier coefficients c_m(rho) = (1/N) sum_j u_j e^{-2 pi i m j / N}
/// for |m| < N/2.
std::map<int, Complex> decompose_circle(const CircleSamples& samples);

/// k_m = c_m(rho) / (P(..; rho²) rho^|m|) for m in [m_lo, m_hi].
Extraction extract_from_samples(const CircleSamples& samples, const Params& params,
                                int m_lo, int m_hi, const EvalConfig& cfg);

Extraction extract_coefficients(const Sampler& sampler, const Params& params,
                                int m_lo, int m_hi, double rho, int n,
                                const EvalConfig& cfg);

/// Fejér mean sum_{|m|<=N} (1 - |m|/(N+1)) u_m(z), with each homogeneous part
/// read off the circle of radius |z|.
Complex fejer_reconstruct(const PolarSampler& sampler, int N, Complex z);

}  // namespace gh::solutions
