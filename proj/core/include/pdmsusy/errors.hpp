#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdmsusy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte position in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, std::string name);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// Evaluation outside the domain of an operation (division by zero, sqrt or
/// ln of an inadmissible argument, overflow to a non-finite value).
class DomainError : public Error {
 public:
  DomainError(double z, const std::string& reason);
  double z() const noexcept { return z_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  double z_;
  std::string reason_;
};

class NonPositiveMass : public DomainError {
 public:
  explicit NonPositiveMass(double z);
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ZeroFunction : public Error {
 public:
  ZeroFunction();
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on a numeric argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pdmsusy
