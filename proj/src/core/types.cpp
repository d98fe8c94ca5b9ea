#include "core/types.hpp"

#include <cmath>

namespace gh {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DenominatorPole: return "DenominatorPole";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadSampleCount: return "BadSampleCount";
    case ErrorCode::DivisorNearZero: return "DivisorNearZero";
    case ErrorCode::StepTooCoarse: return "StepTooCoarse";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
  }
  return "Unknown";
}

void EvalConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw Error(ErrorCode::InvalidArgument, "EvalConfig: tol must be positive");
  if (max_terms < 1)
    throw Error(ErrorCode::InvalidArgument, "EvalConfig: max_terms must be >= 1");
  if (!(fd_step > 0.0) || !std::isfinite(fd_step))
    throw Error(ErrorCode::InvalidArgument, "EvalConfig: fd_step must be positive");
}

}  // namespace gh
