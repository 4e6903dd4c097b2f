#include "geoforge/error.hpp"

namespace geoforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::RepeatedPointWithinCycle: return "RepeatedPointWithinCycle";
    case ErrorCode::MixedGroupOperands: return "MixedGroupOperands";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::EmptyTypeSet: return "EmptyTypeSet";
    case ErrorCode::RankGuard: return "RankGuard";
    case ErrorCode::TypeLabelCollision: return "TypeLabelCollision";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::ActionNotValidated: return "ActionNotValidated";
    case ErrorCode::NotParabolicPermuting: return "NotParabolicPermuting";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::RepNotValid: return "RepNotValid";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

CapExceeded::CapExceeded(std::string_view what, std::uint64_t cap, std::uint64_t reached)
    : Error(ErrorCode::CapExceeded,
            std::string(what) + " (cap " + std::to_string(cap) + ", reached " +
                std::to_string(reached) + ")"),
      cap_(cap),
      reached_(reached) {}

void fail(ErrorCode code, const std::string& what) {
  if (code == ErrorCode::CapExceeded) throw CapExceeded(what, 0, 0);
  throw Error(code, what);
}

}  // namespace geoforge
