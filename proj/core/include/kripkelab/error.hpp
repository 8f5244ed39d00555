#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kripkelab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. position() is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The reflexive-transitive closure of the given pairs has a cycle through x != y.
class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t x, std::size_t y)
      : Error("antisymmetry violation: w" + std::to_string(x) + " <= w" + std::to_string(y) +
              " and w" + std::to_string(y) + " <= w" + std::to_string(x)),
        x_(x),
        y_(y) {}

  std::size_t first() const noexcept { return x_; }
  std::size_t second() const noexcept { return y_; }

 private:
  std::size_t x_;
  std::size_t y_;
};

class UnknownWorld : public Error {
 public:
  UnknownWorld(std::size_t world, std::size_t size)
      : Error("unknown world w" + std::to_string(world) + " (frame has " + std::to_string(size) +
              " worlds)") {}
};

class InvalidFrame : public Error {
 public:
  using Error::Error;
};

// A valuation assigns a set that is not upward closed.
class InvalidValuation : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Malformed JSON input (frame, model).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace kripkelab
