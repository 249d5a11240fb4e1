#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tau {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid family parameters (e.g. Jacobi alpha <= -1).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed call arguments: empty vectors, mismatched sizes.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A recurrence produced a value that no orthogonal family can have
/// (zero leading coefficient, nonpositive norm).
class BasisError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A reference computation cannot deliver its advertised accuracy.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t pivot, double cond_estimate)
      : Error("singular matrix: zero pivot in column " + std::to_string(pivot)),
        pivot_(pivot),
        cond_(cond_estimate) {}

  std::size_t pivot() const noexcept { return pivot_; }
  double cond_estimate() const noexcept { return cond_; }

 private:
  std::size_t pivot_;
  double cond_;
};

/// A computation produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// More supplementary conditions than unknowns.
class OverConstrainedError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tau
