#pragma once

#include <stdexcept>
#include <string>

namespace lkrep {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, labelings, complex literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated (index out of range,
/// strand-count mismatch, unsupported diagram, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation did not produce a certified answer, e.g. no invariant
/// form within tolerance or a multiset difference that is not contained.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lkrep
