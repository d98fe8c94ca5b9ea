#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gh {

using Complex = std::complex<double>;

enum class ErrorCode {
  InvalidArgument,
  DenominatorPole,
  NoConvergence,
  BadSampleCount,
  DivisorNearZero,
  StepTooCoarse,
  NotEquivalent,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parameters (s, t, r) of M = dd̄ - s z d - t z̄ d̄ - r.
struct Params {
  Complex s{};
  Complex t{};
  Complex r{};
};

/// Controls shared by every numerical routine.
struct EvalConfig {
  double tol = 1e-16;     // absolute bound on the discarded series tail
  int max_terms = 10000;  // hard cap on summed terms
  double fd_step = 1e-3;  // finite-difference step h

  void validate() const;
};

}  // namespace gh
