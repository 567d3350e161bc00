#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

// Every failure the library can report. The numeric values are part of the C
// ABI (see include/stacksort/stacksort.h) and must not be reordered.
enum class ErrorCode : int {
  InvalidArgument = 1,
  MalformedToken = 2,
  NotABijection = 3,
  ValueOutOfRange = 4,
  KOutOfRange = 5,
  SiteOutOfRange = 6,
  TooShort = 7,
  LengthTooLarge = 8,
  EmptyPatternSet = 9,
  DegeneratePair = 10,
  SourceNotAvoider = 11,
  NoMatch = 12,
  Not123Avoider = 13,
  InvalidBSequence = 14,
  SemilengthTooLarge = 15,
  Overflow = 16,
  NonIntegerCoefficient = 17,
  CorruptCacheEntry = 18,
  Io = 19,
  Internal = 20,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace stacksort
