#include "oramsey/error.hpp"

namespace oramsey {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotTransitive: return "NotTransitive";
    case ErrorCode::kNotIrreflexive: return "NotIrreflexive";
    case ErrorCode::kNotLinearExtension: return "NotLinearExtension";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotCompatible: return "NotCompatible";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kResourceExceeded: return "ResourceExceeded";
    case ErrorCode::kNotFoundWithinBounds: return "NotFoundWithinBounds";
    case ErrorCode::kCertificationFailed: return "CertificationFailed";
    case ErrorCode::kPartProjectionViolation: return "PartProjectionViolation";
    case ErrorCode::kPartOrderViolation: return "PartOrderViolation";
    case ErrorCode::kIntraPartEdge: return "IntraPartEdge";
    case ErrorCode::kNoCopiesOfB: return "NoCopiesOfB";
    case ErrorCode::kGlueConflict: return "GlueConflict";
    case ErrorCode::kTowerTooShort: return "TowerTooShort";
    case ErrorCode::kClosureIntersectsN: return "ClosureIntersectsN";
    case ErrorCode::kNoneFound: return "NoneFound";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace oramsey
