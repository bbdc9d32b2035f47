#pragma once

#include <stdexcept>
#include <string>

namespace okd {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition or addition of morphisms whose boundary words do not match.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (n = 0, zero scalar, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantum integer [k] vanishes at the requested level.
class GenericityError : public Error {
 public:
  GenericityError(int level, const std::string& what)
      : Error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Fiber functor data violating invertibility or the trace conditions.
class FiberError : public Error {
 public:
  using Error::Error;
};

}  // namespace okd
