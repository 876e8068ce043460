#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtorsion {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. position() is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  std::string const& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// A parameter or argument outside an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtorsion
