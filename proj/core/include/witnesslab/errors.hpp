#pragma once

#include <stdexcept>
#include <string>

namespace witnesslab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong shapes or malformed operators (dimension mismatch, non-Hermitian input).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Values outside the physical domain (unphysical c-vector, T2 > 2 T1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real or consistent came out otherwise.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its cap. Carries the best bracket it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}

  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace witnesslab
