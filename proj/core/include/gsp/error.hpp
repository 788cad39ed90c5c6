#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp {

enum class ErrorCode {
  BadSize,
  ParseError,
  Singular,
  NotConverged,
  RepeatedEigenvalues,
  ReconstructionMismatch,
  DomainMismatch,
  ZeroScale,
  DimensionMismatch,
  NotBandlimited,
  Infeasible,
  SizeMismatch,
  NotDivisible,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract
/// that was violated; what() carries the diagnostic details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsp
