#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsd {

// Root of every error raised by the library. The CLI maps the three
// branches below onto exit codes 2, 3 and 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or unreadable input data.
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : InputError((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class EmptyGraphError : public InputError {
 public:
  EmptyGraphError() : InputError("graph has no edges") {}
};

// A caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EmptySubgraphError : public PreconditionError {
 public:
  EmptySubgraphError() : PreconditionError("density of an empty vertex set") {}
};

class SizeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsd
