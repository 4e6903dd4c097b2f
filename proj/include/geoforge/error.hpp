#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geoforge {

enum class ErrorCode {
  PointOutOfRange,
  MalformedCycle,
  RepeatedPointWithinCycle,
  MixedGroupOperands,
  DegreeMismatch,
  CapExceeded,
  NotAHomomorphism,
  NotBijective,
  EmptyTypeSet,
  RankGuard,
  TypeLabelCollision,
  UnknownType,
  ActionNotValidated,
  NotParabolicPermuting,
  NotAdmissible,
  RepNotValid,
  NotSelfDual,
  NotAMatching,
  UnknownFamily,
  RankTooSmall,
  NotFound,
  ParseError,
  UnresolvedReference,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration would exceed a configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string_view what, std::uint64_t cap, std::uint64_t reached);
  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t cap_;
  std::uint64_t reached_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace geoforge
