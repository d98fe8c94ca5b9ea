#include "core/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/circle_fft.hpp"
#include "core/series.hpp"

namespace gh::solutions {

namespace {

constexpr double kDivisorFloor = 1e-300;

void require_in_disc(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << what << ": z = " << z << " is outside the open unit disc";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

// Radial profile P(.; x) of mode m, including the s <-> t swap for m < 0.
Complex radial_profile(const Params& params, int m, double x, const EvalConfig& cfg) {
  if (m >= 0) return series::eval_P(params, m, Complex{x}, cfg);
  return series::eval_P({params.t, params.s, params.r}, -m, Complex{x}, cfg);
}

Complex ipow(Complex z, int n) {
  Complex result{1.0};
  for (int i = 0; i < n; ++i) result *= z;
  return result;
}

}  // namespace

SolutionSeries::SolutionSeries(const Params& params, const EvalConfig& cfg)
    : params_(params), cfg_(cfg) {
  cfg_.validate();
}

void SolutionSeries::add_mode(int m, Complex k) {
  const bool taken = std::any_of(modes_.begin(), modes_.end(),
                                 [m](const ModeCoefficient& c) { return c.m == m; });
  if (taken) {
    std::ostringstream os;
    os << "duplicate mode index m = " << m;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  modes_.push_back({m, k});
}

void SolutionSeries::check_bound(const CoefficientBound& b) const {
  if (!(b.bound > 0.0) || !(b.rho0 > 0.0 && b.rho0 <= 1.0))
    throw Error(ErrorCode::InvalidArgument,
                "coefficient bound needs bound > 0 and rho0 in (0, 1]");
  for (const auto& c : modes_) {
    const double limit = b.bound * std::pow(b.rho0, -std::abs(c.m));
    if (std::abs(c.k) > limit) {
      std::ostringstream os;
      os << "coefficient k_" << c.m << " = " << c.k << " exceeds declared bound "
         << limit;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

void CircleSamples::validate() const {
  if (!detail::is_power_of_two(values.size())) {
    std::ostringstream os;
    os << "circle sample count " << values.size() << " is not a power of two";
    throw Error(ErrorCode::BadSampleCount, os.str());
  }
  if (!(rho > 0.0 && rho < 1.0))
    throw Error(ErrorCode::InvalidArgument, "circle radius must lie in (0, 1)");
}

Complex mode_value(const Params& params, int m, Complex k, Complex z,
                   const EvalConfig& cfg) {
  require_in_disc(z, "mode_value");
  const Complex phase = m >= 0 ? ipow(z, m) : ipow(std::conj(z), -m);
  return k * radial_profile(params, m, std::norm(z), cfg) * phase;
}

Complex eval_solution(const SolutionSeries& sol, Complex z) {
  require_in_disc(z, "eval_solution");
  Complex sum{};
  for (const auto& c : sol.modes())
    sum += mode_value(sol.params(), c.m, c.k, z, sol.config());
  return sum;
}

SolutionSeries modes_from_taylor(const Params& params, std::span<const Complex> d_plus,
                                 std::span<const Complex> d_minus,
                                 const EvalConfig& cfg) {
  SolutionSeries sol(params, cfg);
  double factorial = 1.0;
  for (std::size_t m = 0; m < d_plus.size(); ++m) {
    if (m > 0) factorial *= static_cast<double>(m);
    sol.add_mode(static_cast<int>(m), d_plus[m] / factorial);
  }
  factorial = 1.0;
  for (std::size_t j = 0; j < d_minus.size(); ++j) {
    factorial *= static_cast<double>(j + 1);
    sol.add_mode(-static_cast<int>(j + 1), d_minus[j] / factorial);
  }
  return sol;
}

std::vector<Complex> sample_circle(const Sampler& sampler, double rho, int n) {
  if (n <= 0 || !detail::is_power_of_two(static_cast<std::size_t>(n))) {
    std::ostringstream os;
    os << "circle sample count " << n << " is not a power of two";
    throw Error(ErrorCode::BadSampleCount, os.str());
  }
  std::vector<Complex> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    values[j] = sampler(std::polar(rho, 2.0 * std::numbers::pi * j / n));
  return values;
}

std::map<int, Complex> decompose_circle(const CircleSamples& samples) {
  samples.validate();
  const auto spectrum = detail::normalized_forward_dft(samples.values);
  const int n = static_cast<int>(spectrum.size());
  std::map<int, Complex> coeffs;
  for (int m = -(n / 2) + 1; m < (n + 1) / 2; ++m)
    coeffs[m] = spectrum[static_cast<std::size_t>((m % n + n) % n)];
  return coeffs;
}

Extraction extract_from_samples(const CircleSamples& samples, const Params& params,
                                int m_lo, int m_hi, const EvalConfig& cfg) {
  samples.validate();
  if (m_lo > m_hi)
    throw Error(ErrorCode::InvalidArgument, "extract: empty mode range");
  const auto spectrum = detail::normalized_forward_dft(samples.values);
  const int n = static_cast<int>(spectrum.size());
  const double rho = samples.rho;

  Extraction out;
  for (int m = m_lo; m <= m_hi; ++m) {
    if (2 * std::abs(m) >= n) out.alias_warning = true;
    const Complex c = spectrum[static_cast<std::size_t>((m % n + n) % n)];
    const Complex divisor =
        radial_profile(params, m, rho * rho, cfg) * std::pow(rho, std::abs(m));
    if (std::abs(divisor) < kDivisorFloor) {
      std::ostringstream os;
      os << "extract: divisor P(rho^2) rho^|m| = " << divisor << " for m = " << m
         << " is below " << kDivisorFloor << "; choose a different rho";
      throw Error(ErrorCode::DivisorNearZero, os.str());
    }
    out.coefficients.push_back({m, c / divisor});
  }
  return out;
}

Extraction extract_coefficients(const Sampler& sampler, const Params& params,
                                int m_lo, int m_hi, double rho, int n,
                                const EvalConfig& cfg) {
  CircleSamples samples{rho, sample_circle(sampler, rho, n)};
  return extract_from_samples(samples, params, m_lo, m_hi, cfg);
}

Complex fejer_reconstruct(const PolarSampler& sampler, int N, Complex z) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "fejer: N must be nonnegative");
  require_in_disc(z, "fejer_reconstruct");
  const double rho = std::abs(z);
  const double theta = std::arg(z);
  // Enough samples that every |m| <= N lies strictly below the Nyquist index.
  std::size_t count = 1;
  while (count <= 2 * static_cast<std::size_t>(N) + 1) count *= 2;
  std::vector<Complex> values(count);
  for (std::size_t j = 0; j < count; ++j)
    values[j] = sampler(rho, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(count));
  const auto spectrum = detail::normalized_forward_dft(values);
  const int n = static_cast<int>(count);
  Complex sum{};
  for (int m = -N; m <= N; ++m) {
    const double weight = 1.0 - std::abs(m) / (N + 1.0);
    const Complex c = spectrum[static_cast<std::size_t>((m % n + n) % n)];
    sum += weight * c * std::polar(1.0, m * theta);
  }
  return sum;
}

}  // namespace gh::solutions
