#include "gsp/error.hpp"

namespace gsp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::RepeatedEigenvalues: return "RepeatedEigenvalues";
    case ErrorCode::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotBandlimited: return "NotBandlimited";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gsp
