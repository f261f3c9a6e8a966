#ifndef EULERTOP_ERRORS_HPP
#define EULERTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulertop {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's precondition (mismatched variables, bad
// order, odd degree, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Series reversion needs f(0) = 0 and a unit linear coefficient.
class SingularReversionError : public Error {
 public:
  using Error::Error;
};

// A Laurent polynomial in rho could not be rewritten as a polynomial in kappa.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

// Physical parameters failed validation; the message names the constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a numeric routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulertop

#endif  // EULERTOP_ERRORS_HPP
