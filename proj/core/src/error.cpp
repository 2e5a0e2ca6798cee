#include "cmc/error.hpp"

namespace cmc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Accuracy: return "accuracy error";
    case ErrorKind::NoSolution: return "no solution";
    case ErrorKind::SingularParametrization: return "singular parametrization";
    case ErrorKind::StepUnderflow: return "step underflow";
  }
  return "error";
}

}  // namespace cmc
