#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace possib {

// Base class for every error raised by this library. The command line tool
// maps subclasses onto process exit codes, so new error kinds should derive
// from one of the classes below rather than from std::exception directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (theories, formulas). Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally invalid task or instance data (JSON payloads, flag values).
class InputError : public Error {
 public:
  using Error::Error;
};

// A predicate or constant is used outside the declared signature/universe,
// or with the wrong arity.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// A variable reached a context that requires ground terms, e.g. grounding
// over an empty universe.
class VariableInGroundContext : public Error {
 public:
  using Error::Error;
};

// The Herbrand base exceeds the enumeration cap.
class BaseTooLarge : public Error {
 public:
  using Error::Error;
};

// A base that must be contained in another one is not.
class SubbaseMismatch : public Error {
 public:
  using Error::Error;
};

// An operation requiring Horn clauses received a non-Horn theory.
class NotHorn : public Error {
 public:
  using Error::Error;
};

// A theory that must be satisfiable has no model.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

// An example admits no partial model at all; no hypothesis can be judged
// against it.
class DegenerateExample : public Error {
 public:
  using Error::Error;
};

// A possibility example with an empty list of possibilities.
class EmptyPossibilities : public Error {
 public:
  using Error::Error;
};

// An operation restricted to positive cubes received a negated literal.
class NotDnfPlus : public Error {
 public:
  using Error::Error;
};

// An assumption set does not determine a unique truth value for every atom
// of the learning base.
class IncompleteDeduction : public Error {
 public:
  using Error::Error;
};

// Weighted aggregation was requested but some possibility lacks a weight.
class MissingWeights : public Error {
 public:
  using Error::Error;
};

// A possibility whose theory must pin down exactly one model does not.
class NotSingleModel : public Error {
 public:
  using Error::Error;
};

// A theory required to be satisfiable for a translation step is not.
class Unsatisfiable : public Error {
 public:
  using Error::Error;
};

// A hypothesis space enumeration would exceed its cap.
class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// Relation data over palindrome names fails validation.
class MalformedRelations : public Error {
 public:
  using Error::Error;
};

}  // namespace possib
