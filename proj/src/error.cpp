#include "prefdist/error.hpp"

namespace prefdist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::DuplicateObject: return "DuplicateObject";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyExpression: return "EmptyExpression";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SubsetNotMentioned: return "SubsetNotMentioned";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::DegenerateUniverse: return "DegenerateUniverse";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::UnnormalizedMass: return "UnnormalizedMass";
    case ErrorKind::InconsistentMatrix: return "InconsistentMatrix";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace prefdist
