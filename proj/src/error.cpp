#include "shapeforge/error.hpp"

#include <cstdlib>
#include <string>

namespace shapeforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ResourceGuard: return "ResourceGuard";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::AdjacentPair: return "AdjacentPair";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::DirectlyNested: return "DirectlyNested";
    case ErrorCode::NegativeHeight: return "NegativeHeight";
    case ErrorCode::NonzeroFinalHeight: return "NonzeroFinalHeight";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::LargeRemainder: return "LargeRemainder";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
  }
  return "Unknown";
}

std::size_t enumeration_guard(std::size_t default_limit) {
  const char* env = std::getenv("SHAPEFORGE_MAX_N");
  if (env == nullptr || *env == '\0') return default_limit;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return default_limit;
  return static_cast<std::size_t>(v);
}

}  // namespace shapeforge
