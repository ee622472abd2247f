#include "mzscatter/error.hpp"

namespace mzscatter {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kClosedChannel: return "ClosedChannel";
    case ErrorKind::kDegenerateBasis: return "DegenerateBasis";
    case ErrorKind::kSingularExtraction: return "SingularExtraction";
    case ErrorKind::kSingularConversion: return "SingularConversion";
    case ErrorKind::kUnknownPhaseLaw: return "UnknownPhaseLaw";
    case ErrorKind::kAmbiguousMinimum: return "AmbiguousMinimum";
    case ErrorKind::kNoBracket: return "NoBracket";
    case ErrorKind::kUndefined: return "Undefined";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace mzscatter
