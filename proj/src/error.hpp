#pragma once

#include <stdexcept>
#include <string>

namespace bookramsey {

// Bad argument to an operation (out-of-range vertex, non-prime, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (graph6, adjacency rows, spec text, registry lines).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that parses but breaks a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bookramsey
