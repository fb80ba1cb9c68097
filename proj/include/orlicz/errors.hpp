#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Base class for every failed precondition raised by the library.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when an operation needs Phi > 0 on (0, inf) but the function vanishes near 0.
class NonStrict : public DomainError {
 public:
  using DomainError::DomainError;
};

class Delta2Required : public DomainError {
 public:
  using DomainError::DomainError;
};

class LimitsRequired : public DomainError {
 public:
  using DomainError::DomainError;
};

class Infeasible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonConvergence : public DomainError {
 public:
  using DomainError::DomainError;
};

class QuadratureFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroFunction : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An inner (per-section) norm failed inside a mixed-norm computation.
class InnerFailure : public DomainError {
 public:
  InnerFailure(const std::string& message, double y)
      : DomainError(message + " (section y = " + std::to_string(y) + ")"), y_(y) {}

  double y() const { return y_; }

 private:
  double y_;
};

/// Syntax error in a function or integrand spec string. Carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace orlicz
