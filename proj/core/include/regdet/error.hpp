#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad alphabet declaration, bad automaton file, etc.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  enum class Kind { Syntax, UnknownSymbol, BadRepetition };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : InputError(message + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Subset construction (or another exhaustive exploration) went past its cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeded the cap of " + std::to_string(cap)), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A measured quantity broke a proven inequality or a structural invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace regdet
