#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffrep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A dense 2^n x 2^n construction or a blade operation exceeded its dimension cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation needs r = 0.
class DegenerateSignature : public Error {
 public:
  using Error::Error;
};

/// Duality coefficient requested for a blade whose square is zero.
class DegenerateDual : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Exact elimination found no pivot.
class Singular : public Error {
 public:
  using Error::Error;
};

/// The multivector has no inverse (its representation matrix is singular).
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// Parse failure at a byte offset of the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffrep
