#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shapeforge {

/// Domain failures raised by the library. The code names the violated
/// invariant and is what the CLI prints on a domain error.
enum class ErrorCode {
  InvalidArgument,
  ResourceGuard,
  IllegalCharacter,
  UnbalancedBrackets,
  AdjacentPair,
  InvalidShape,
  EmptyResult,
  DirectlyNested,
  NegativeHeight,
  NonzeroFinalHeight,
  NotInImage,
  NonUnitConstantTerm,
  DivisibilityFailure,
  UnknownIdentity,
  NoRootFound,
  LargeRemainder,
  UnsupportedTarget,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Upper bound for exhaustive enumerations. SHAPEFORGE_MAX_N, when set to a
/// positive integer, replaces the built-in default. Unsafe: large values can
/// exhaust memory or run for hours.
std::size_t enumeration_guard(std::size_t default_limit);

}  // namespace shapeforge
