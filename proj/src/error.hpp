#pragma once

#include <stdexcept>
#include <string>

namespace shellbound {

enum class ErrorCode {
  InvalidArgument,
  DivisionBySingularSeries,
  InnerNotVanishing,
  NotNormalized,
  OverflowGuard,
  PoleProximity,
  NotSchwarz,
  DegenerateDenominator,
  BranchUndefined,
  InvariantViolation,
};

/// The single exception type thrown by the library. Carries a stable code so
/// the C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace shellbound
