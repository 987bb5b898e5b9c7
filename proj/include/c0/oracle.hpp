#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c0/canonical.hpp"

namespace c0 {

// Canonical basis of {A : psi(A) maps M into Mp}, expressed as reduced
// commutant symbols.  Both subspaces must live on the same pair.
std::vector<CommutantElement> constrained_commutant(const Subspace& m, const Subspace& mp);

enum class Certificate { Probabilistic, Exact };

// Outcome of the witness search between two subspaces.
struct SearchResult {
  std::optional<CommutantElement> witness;  // normalized, verified
  int trials_used = 0;
  Certificate certificate = Certificate::Probabilistic;
  std::string reason;  // set when no witness exists/was found
};

// Seeded random search for an invertible element of the constrained
// commutant; a hit is re-verified exactly (quasiaffinity, commutation with
// the model operator, psi(A)*M == Mp) and returned normalized so its first
// nonzero coefficient is 1.  Coefficients are drawn from [-10^4, 10^4], so a
// single trial misses an existing witness with probability at most
// dim/(2*10^4).  When `exact_certificate` is set and the constrained space
// has dimension <= 8, an exhausted search expands det(sum t_j psi(C_j))
// symbolically: the zero polynomial certifies nonexistence exactly.
SearchResult find_quasisimilarity(const Subspace& m, const Subspace& mp, Rng& rng,
                                  int trials = 64, bool exact_certificate = false);

enum class VerdictKind { Equivalent, Inequivalent, Falsification };

struct Verdict {
  VerdictKind kind = VerdictKind::Falsification;
  std::optional<CommutantElement> witness;
  std::string reason;
  int trials_used = 0;
  Certificate certificate = Certificate::Probabilistic;
};

// Full classification of a pair of invariant subspaces: compares the
// invariant data first (a mismatch is an exact inequivalence, no search);
// equal data triggers the witness search, whose failure — impossible if the
// classification theory holds — is reported as a Falsification verdict rather
// than masked.
Verdict classify(const Subspace& m, const Subspace& mp, Rng& rng, int trials = 64,
                 bool exact_certificate = false);

// Builds the canonical subspace with M's invariant data and classifies M
// against it; the expected verdict is Equivalent with a verified witness.
struct CanonicalReduction {
  Verdict verdict;
  Subspace canonical;
};
CanonicalReduction reduce_to_canonical(const Subspace& m, Rng& rng, int trials = 64,
                                       bool exact_certificate = false);

std::string to_string(VerdictKind k);
std::string to_string(Certificate c);

}  // namespace c0
