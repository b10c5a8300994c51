#pragma once

#include <stdexcept>
#include <string>

namespace schlicht {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside the domain an operation is defined on (bad parameters,
// violated hypotheses). The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical breakdown while evaluating something well-posed in principle.
// The CLI maps these to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParameterDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

class HypothesisViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

class RadiusOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByNonUnit : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonvanishingInnerConstant : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BranchPointAtOrigin : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InversionSingular : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularEvaluation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PreconditionNotVerified : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace schlicht
