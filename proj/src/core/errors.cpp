#include "errors.hpp"

namespace stacksort {

const char* to_string(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::MalformedToken: return "MalformedToken";
  case ErrorCode::NotABijection: return "NotABijection";
  case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
  case ErrorCode::KOutOfRange: return "KOutOfRange";
  case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
  case ErrorCode::TooShort: return "TooShort";
  case ErrorCode::LengthTooLarge: return "LengthTooLarge";
  case ErrorCode::EmptyPatternSet: return "EmptyPatternSet";
  case ErrorCode::DegeneratePair: return "DegeneratePair";
  case ErrorCode::SourceNotAvoider: return "SourceNotAvoider";
  case ErrorCode::NoMatch: return "NoMatch";
  case ErrorCode::Not123Avoider: return "Not123Avoider";
  case ErrorCode::InvalidBSequence: return "InvalidBSequence";
  case ErrorCode::SemilengthTooLarge: return "SemilengthTooLarge";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
  case ErrorCode::CorruptCacheEntry: return "CorruptCacheEntry";
  case ErrorCode::Io: return "Io";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace stacksort
