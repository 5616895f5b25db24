#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetasphere {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole. Carries the pole location and its residue.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::complex<double> location, std::complex<double> residue)
      : Error(what), location_(location), residue_(residue) {}

  std::complex<double> location() const noexcept { return location_; }
  std::complex<double> residue() const noexcept { return residue_; }

 private:
  std::complex<double> location_;
  std::complex<double> residue_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Im ζ̃(1/2+it) exceeded its bound; indicates an evaluator defect.
class RealnessViolation : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class PhaseJumpError : public Error {
 public:
  using Error::Error;
};

class InvalidSpherePoint : public Error {
 public:
  using Error::Error;
};

class InsufficientOrdinates : public Error {
 public:
  using Error::Error;
};

class BoundaryPoint : public Error {
 public:
  using Error::Error;
};

class DegreeNotZero : public Error {
 public:
  using Error::Error;
};

}  // namespace zetasphere
