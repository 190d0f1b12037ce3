#include "pdmsusy/errors.hpp"

#include <cstdio>

namespace pdmsusy {

namespace {

std::string at(double z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", z);
  return buf;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      message_(message) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, std::string name)
    : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      offset_(offset),
      name_(std::move(name)) {}

DomainError::DomainError(double z, const std::string& reason)
    : Error("domain error at z = " + at(z) + ": " + reason), z_(z), reason_(reason) {}

NonPositiveMass::NonPositiveMass(double z) : DomainError(z, "mass is not positive") {}

ConvergenceFailure::ConvergenceFailure(std::size_t index)
    : Error("inverse iteration failed to converge for eigenpair " + std::to_string(index)),
      index_(index) {}

ZeroFunction::ZeroFunction() : Error("cannot normalise the zero function") {}

}  // namespace pdmsusy
