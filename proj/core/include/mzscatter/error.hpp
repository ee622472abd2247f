#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzscatter {

// Failure categories raised by the physics and analysis layers.
enum class ErrorKind {
  kInvalidArgument,
  kClosedChannel,
  kDegenerateBasis,
  kSingularExtraction,
  kSingularConversion,
  kUnknownPhaseLaw,
  kAmbiguousMinimum,
  kNoBracket,
  kUndefined,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mzscatter
