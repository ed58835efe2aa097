#pragma once

#include <stdexcept>
#include <string>

namespace fracjet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad order, short grid,
/// mismatched trajectories, pole of the gamma function, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The inputs were acceptable but the computation failed: a series did not
/// converge, a solver diverged, a Hessian was singular.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracjet
