#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csync {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input. Maps to CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A search or enumeration hit its cap before reaching an answer. Exit code 4.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace csync
