#pragma once

#include <stdexcept>
#include <string>

namespace c0 {

// Base of all library errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual/JSON input (grammar violation, bad degree bound, ...).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// A precondition on a value was violated (negative length, boundary zero, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Divisor division requested but the divisor does not divide.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

// Span of the supplied generators is not invariant under the model operator.
struct NotInvariant : Error {
  explicit NotInvariant(const std::string& what) : Error(what) {}
};

// Matrix passed to a Jordan-model routine is not nilpotent.
struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& what) : Error(what) {}
};

// Vector fails a cyclicity hypothesis.
struct NotCyclic : Error {
  explicit NotCyclic(const std::string& what) : Error(what) {}
};

// Structural hypothesis of an operation does not hold for the input.
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

// Triple fails the admissibility inequalities; carries the failed condition.
struct NotAdmissible : Error {
  explicit NotAdmissible(const std::string& cond)
      : Error("not admissible: " + cond), condition(cond) {}
  std::string condition;
};

// A randomized search exceeded its retry cap.  With the generic samplers this
// signals a bug, not bad luck, so it is an error rather than an outcome.
struct RetriesExhausted : Error {
  explicit RetriesExhausted(const std::string& what) : Error(what) {}
};

// Two instances that must share a model pair do not.
struct ThetaMismatch : Error {
  explicit ThetaMismatch(const std::string& what) : Error(what) {}
};

// An exact identity that the theory guarantees failed on concrete data.
// Thrown so that no run can silently swallow a counterexample.
struct FalsificationError : Error {
  explicit FalsificationError(const std::string& what)
      : Error("FALSIFICATION: " + what) {}
};

}  // namespace c0
