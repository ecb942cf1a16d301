#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phantom {

// Malformed or inconsistent input: bad syntax, wrong shapes, ill-defined maps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(message + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Input that is well formed but outside what the engine can decide.
class UnsupportedInput : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

// Degree or basis-size budget exhausted; the run is aborted, never guessed.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lift through a map that should exist under the stated hypotheses does not.
class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phantom
