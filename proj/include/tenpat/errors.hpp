#pragma once

#include <stdexcept>
#include <string>

namespace tenpat {

// Bad parameters, malformed constructions, infeasible requests.
// CLI maps this (and option parsing failures) to exit code 2.
struct argument_error : std::invalid_argument {
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration cap or node budget was hit. CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Carries a human-readable location (field path or line).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A verified internal invariant failed. Thrown instead of silently accepting
// a value that contradicts what the library is supposed to guarantee; any
// throw of this type is a bug or a genuine counterexample.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tenpat
