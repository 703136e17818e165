#include "hydro/errors.hpp"

namespace hydro {

const char* to_string(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Config:
      return "config";
    case ErrorCategory::Positivity:
      return "positivity";
    case ErrorCategory::Protocol:
      return "protocol";
    case ErrorCategory::TaskGraph:
      return "task-graph";
    case ErrorCategory::Equivalence:
      return "equivalence";
    case ErrorCategory::Io:
      return "io";
    case ErrorCategory::Validation:
      return "validation";
  }
  return "unknown";
}

}  // namespace hydro
