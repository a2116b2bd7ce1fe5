#ifndef QCIRC_ERROR_HPP
#define QCIRC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcirc {

/// Every failure the library reports. The enumerator names double as the
/// stable error identifiers emitted by the command-line tool.
enum class ErrorCode {
  EmptyWeightVector,
  NonPositiveWeight,
  Unsorted,
  NotCoprime,
  IndexOutOfRange,
  DimensionMismatch,
  DoesNotFixOrigin,
  NotResonant,
  NotNonlinear,
  EmptyPool,
  WeightMismatch,
  SingularLinearMap,
  BlockDiagonalInput,
  SingularLinearPart,
  NoResonantConjugacy,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace qcirc

#endif  // QCIRC_ERROR_HPP
