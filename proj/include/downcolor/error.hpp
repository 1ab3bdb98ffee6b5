#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace downcolor {

// Root of every error this library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (edge lists, hypergraph files, coloring/matrix documents).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// An operation that needs an acyclic digraph got a cyclic one. Carries the
// labels along one directed cycle, first label repeated at the end.
class CycleError : public Error {
public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string> &cycle() const noexcept { return cycle_; }

private:
  std::vector<std::string> cycle_;
};

// Size cap or search budget exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// A coloring or matrix that fails its validity check where validity is a
// precondition.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace downcolor
