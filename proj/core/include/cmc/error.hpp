#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

enum class ErrorKind {
  InvalidInput,
  Domain,
  Accuracy,
  NoSolution,
  SingularParametrization,
  StepUnderflow,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

struct AccuracyError : Error {
  explicit AccuracyError(const std::string& what)
      : Error(ErrorKind::Accuracy, what) {}
};

struct NoSolutionError : Error {
  explicit NoSolutionError(const std::string& what)
      : Error(ErrorKind::NoSolution, what) {}
};

struct SingularParametrizationError : Error {
  explicit SingularParametrizationError(const std::string& what)
      : Error(ErrorKind::SingularParametrization, what) {}
};

// Carries the parameter value the integrator had reached when the step
// size collapsed.
class StepUnderflowError : public Error {
 public:
  StepUnderflowError(const std::string& what, double reached)
      : Error(ErrorKind::StepUnderflow, what), reached_(reached) {}
  double reached() const noexcept { return reached_; }

 private:
  double reached_;
};

}  // namespace cmc
