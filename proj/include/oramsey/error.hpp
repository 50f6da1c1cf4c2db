#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oramsey {

enum class ErrorCode {
  kInvalidInput,
  kNotTransitive,
  kNotIrreflexive,
  kNotLinearExtension,
  kNotDisjoint,
  kNotCompatible,
  kCycleDetected,
  kResourceExceeded,
  kNotFoundWithinBounds,
  kCertificationFailed,
  kPartProjectionViolation,
  kPartOrderViolation,
  kIntraPartEdge,
  kNoCopiesOfB,
  kGlueConflict,
  kTowerTooShort,
  kClosureIntersectsN,
  kNoneFound,
  kInvariantViolation,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message names the offending pair, part or bound.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace oramsey
