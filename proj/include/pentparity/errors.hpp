#pragma once

#include <stdexcept>

namespace pentparity {

// (n, s) does not describe a class 2 pentanomial.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's domain (zero divisor, non-monic input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form was requested for parameters it does not cover, e.g. the
// pentanomial discriminant formula with odd s.
class OutOfTheoryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that must hold for every input did not. Seeing one means a bug,
// or a counterexample to a proven statement.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed textual input (hex polynomials, CSV rows).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pentparity
