#pragma once

#include <stdexcept>
#include <string>

namespace logarr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, volume files, permutations, manifests).
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(std::int64_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what) {}
};

// Structurally well-formed input that violates a documented requirement.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A broken API precondition; indicates a caller bug, not bad user input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace logarr
