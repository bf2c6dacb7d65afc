#pragma once

#include <stdexcept>
#include <string>

namespace cdgl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on the algebraic input failed (wrong degree, mismatched
/// truncation, unknown generator, non-MC element, ...).
struct AlgebraError : Error {
  using Error::Error;
};

/// Malformed documents and command-line input.
struct InputError : Error {
  using Error::Error;
};

/// A linear system that should be solvable had no solution at the current
/// truncation, or an iteration failed to terminate.
struct SolveError : Error {
  using Error::Error;
};

}  // namespace cdgl
