#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace semiring_lab {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Table has the wrong shape, entries out of range, or the order is
/// outside the supported [2, 64] window ([1, 64] for semimodules).
struct MalformedTable : Error {
  using Error::Error;
};

/// A structural axiom failed during validation. `axiom` is a stable
/// machine-readable name; `witness` holds the elements that break it.
struct AxiomViolation : Error {
  AxiomViolation(const std::string& structure, std::string axiom_name,
                 std::vector<int> witness_elems);
  std::string axiom;
  std::vector<int> witness;
};

/// A subset was used with a structure it does not belong to.
struct OwnerMismatch : Error {
  using Error::Error;
};

/// Two semimodules were combined but live over different base semirings.
struct BaseMismatch : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotASubsemimodule : Error {
  using Error::Error;
};

struct NotMaximal : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

struct NotMultClosed : Error {
  using Error::Error;
};

/// An operation's documented precondition does not hold for the input.
struct PreconditionUnmet : Error {
  using Error::Error;
};

/// The input exceeds a documented size guard for an exhaustive search.
struct SizeBoundExceeded : Error {
  using Error::Error;
};

/// Text input could not be parsed; `line` is 1-based.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what);
  int line;
};

/// A semimodule block names a base semiring that is not in scope.
struct UnknownBase : Error {
  using Error::Error;
};

struct UnknownTheorem : Error {
  using Error::Error;
};

/// An internal consistency check failed; indicates a library bug.
struct InternalCheckFailure : Error {
  using Error::Error;
};

}  // namespace semiring_lab
