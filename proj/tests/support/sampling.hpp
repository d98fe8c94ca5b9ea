#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace testing_support {

using C = std::complex<double>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  // Uniform in the closed disc |w| <= radius.
  C disc(double radius) {
    const double rho = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(rho, uniform(-M_PI, M_PI));
  }

  // Gaussian integer with components in [-bound, bound].
  C gaussian_integer(int bound) {
    return {static_cast<double>(integer(-bound, bound)),
            static_cast<double>(integer(-bound, bound))};
  }

 private:
  std::mt19937_64 gen_;
};

inline double rel_err(C got, C want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing_support
