#pragma once

#include <stdexcept>
#include <string>

namespace ordtop {

// Base class for all domain errors raised by constructive operations.
// Validation-style operations report through result structs instead and
// do not throw on a negative finding.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A construction needed a space that is completely regularly preordered
// and the input is not; carries a human-readable witness.
struct NotCompletelyRegularError : Error {
  using Error::Error;
};

// An order embedding was requested for a space whose preorder is not a
// partial order.
struct NotAntisymmetricError : Error {
  using Error::Error;
};

// A construction needed an admissible quasi-pseudo-metric and the given
// one is not admissible for the given space.
struct NotAdmissibleError : Error {
  using Error::Error;
};

// A family of functions was empty where a nonempty one is required.
struct EmptyFamilyError : Error {
  using Error::Error;
};

// A product of zero factors was requested.
struct EmptyProductError : Error {
  using Error::Error;
};

// The intersection of an entourage family fails transitivity, so it does
// not define a preorder.
struct NonTransitiveCoreError : Error {
  using Error::Error;
};

// Two objects that must live on the same point set (or cube dimension)
// do not.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// A suite or implication identifier is not registered.
struct UnknownSuiteError : Error {
  using Error::Error;
};

}  // namespace ordtop
