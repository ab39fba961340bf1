#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or depth cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed sentence text. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A formula mentions a variable that no quantifier or assignment binds.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace toto
