#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vphi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group arithmetic on incompatible or malformed elements.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Wreath recursion misuse (e.g. preimage of a non-injective recursion).
class RecursionError : public Error {
 public:
  using Error::Error;
};

/// Malformed diagrams, partition sets or words.
class DiagramError : public Error {
 public:
  using Error::Error;
};

/// Operation applied outside its domain (wrong context, arity, rule).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (JSON shape, missing fields).
class FormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace vphi
