#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when a numeric evaluation point is too close to a denominator zero set.
class PoleError : public Error {
 public:
  PoleError(std::string denominator, double magnitude)
      : Error("evaluation point too close to pole of " + denominator),
        denominator_(std::move(denominator)),
        magnitude_(magnitude) {}
  const std::string& denominator() const { return denominator_; }
  double magnitude() const { return magnitude_; }

 private:
  std::string denominator_;
  double magnitude_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rdc
