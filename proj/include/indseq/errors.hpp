#pragma once

#include <stdexcept>
#include <string>

namespace indseq {

// Base of every error raised by the library. Each subclass maps onto one CLI
// exit code: ParseError -> 2, BudgetExceeded -> 3, PreconditionError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: graph6, builder expressions, JSON documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A node/size budget ran out before an exact answer was reached. This is not
// a statement about the answer, only about the search.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Index outside both ranges covered by the unimodality threshold
// (the band n/2-1 < t < n/2+1 is deliberately uncovered).
class UncoveredIndex : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace indseq
