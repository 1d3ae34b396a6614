#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuzzyfo {

// Base of every recoverable input error. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSize : Error {
  using Error::Error;
};

// A t-norm table failed one of the chain axioms. `axiom` names it and
// (x, y, z) is a witnessing triple (unused coordinates are zero).
struct ChainValidationError : Error {
  ChainValidationError(std::string axiom_name, unsigned x, unsigned y, unsigned z);
  std::string axiom;
  unsigned x, y, z;
};

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // 0-based offset in formula text; line number in file formats
};

struct ArityError : Error {
  using Error::Error;
};

// A formula lies outside the fragment an operation accepts.
struct FragmentError : Error {
  using Error::Error;
};

// A transformation needs a symbol the vocabulary forbids (Skolem functions
// under a relational vocabulary).
struct VocabularyViolation : Error {
  using Error::Error;
};

// An operation restricted to a chain family was given another chain.
struct UnsupportedChain : Error {
  using Error::Error;
};

struct EvaluationError : Error {
  using Error::Error;
};

// A search space larger than the configured budget.
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, long double space, std::uint64_t budget);
  long double space;
  std::uint64_t budget;
};

// Two independently computed answers disagree. This is an implementation
// bug; the CLI maps it to exit code 2.
struct ConsistencyFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fuzzyfo
