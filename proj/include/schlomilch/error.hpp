#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schlomilch {

// Argument outside the mathematical domain of an operation (pole, negative
// order, modulus >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument inside the domain but outside the range this implementation
// supports (gamma overflow, Bessel guard, ...).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when an integrand returns a non-finite value at a node that carries
// non-negligible weight.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(double node, const std::string& message)
      : std::runtime_error(message), node_(node) {}

  double node() const noexcept { return node_; }

 private:
  double node_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace schlomilch
