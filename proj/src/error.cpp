#include "qcirc/error.hpp"

namespace qcirc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWeightVector: return "EmptyWeightVector";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::Unsorted: return "Unsorted";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DoesNotFixOrigin: return "DoesNotFixOrigin";
    case ErrorCode::NotResonant: return "NotResonant";
    case ErrorCode::NotNonlinear: return "NotNonlinear";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::SingularLinearMap: return "SingularLinearMap";
    case ErrorCode::BlockDiagonalInput: return "BlockDiagonalInput";
    case ErrorCode::SingularLinearPart: return "SingularLinearPart";
    case ErrorCode::NoResonantConjugacy: return "NoResonantConjugacy";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qcirc
