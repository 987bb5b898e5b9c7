#pragma once

#include <string>
#include <vector>

#include "c0/jordan.hpp"

namespace c0 {

// A candidate invariant datum: the pair together with a restriction model
// alpha and a compression model beta, each at most two parts with parts
// bounded by the corresponding block sizes.
struct Triple {
  ModelPair theta;
  Partition alpha;  // two parts a0 >= a1
  Partition beta;   // two parts b0 >= b1

  Triple(ModelPair t, Partition a, Partition b);

  int a0() const { return alpha.part(0); }
  int a1() const { return alpha.part(1); }
  int b0() const { return beta.part(0); }
  int b1() const { return beta.part(1); }

  bool operator==(const Triple& o) const {
    return theta == o.theta && alpha.same_as(o.alpha) && beta.same_as(o.beta);
  }
  std::string to_string() const;
};

// The three admissibility conditions:
//   n0 + n1 == a0 + a1 + b0 + b1
//   n1 - b1 <= a0
//   b1 <= min(n0 - a0, n1 - a1)
// Returns empty when all hold, otherwise the first failed condition verbatim.
std::string admissible_failure(const Triple& t);
bool admissible(const Triple& t);

// All admissible triples over a pair, in a fixed deterministic order.
std::vector<Triple> admissible_triples(const ModelPair& p);

// The canonical invariant subspace realizing an admissible triple: the orbit
// span of xi = (P z^{n0-a0}, P z^{b1}) and eta = (0, P z^{n1-a1}), where P
// projects z^m to e_m when m < n and to 0 otherwise.  Asserts that the result
// projects to exponents (n0-a0, b1) and has invariant data exactly
// (alpha, beta).  Throws NotAdmissible (with the failed condition) otherwise.
Subspace canonical_subspace(const Triple& t);

// Result of hyper-normalization: a quasiaffinity symbol and the image of M
// under it whose coordinate projection exponents (m0, m1) satisfy the chain
// conditions m1 <= m0 and n1 - m1 <= n0 - m0.
struct HyperNormalization {
  CommutantElement symbol;
  Subspace image;
  int m0;
  int m1;
};

// Brings M to hyper-normal position.  A subspace already in position gets the
// identity symbol.  Otherwise samples a maximal vector xi of M and nonzero
// integer scalars c in [-9, 9] with
//   valuation(c00*xi0 + c01*z^{n0-n1}*xi1, n0)  minimal,
//   valuation(c10*xi0 + c11*xi1, n1)            minimal,
//   c00*c11 - c10*c01*z^{n0-n1}                 of valuation 0,
// applies psi of the scalar symbol, and verifies the exponent conditions and
// that the invariant data is preserved.  Retry cap 64.
HyperNormalization hyper_normalize(const Subspace& m, Rng& rng);

// The four structural identities of a hyper-normal invariant subspace.
struct WeylReport {
  JordanData data;
  int m0;
  int m1;
  bool dimension_identity;    // |alpha| + |beta| == n0 + n1
  bool projection_identities; // m0 == n0 - a0 and m1 == b1
  bool restriction_bound;     // n1 - b1 <= a0
  bool compression_bound;     // b1 <= min(n0 - a0, n1 - a1)

  bool all_hold() const {
    return dimension_identity && projection_identities && restriction_bound && compression_bound;
  }
};

// Computes the report for a subspace whose exponents already satisfy the
// chain conditions; refuses (HypothesisViolated) rather than normalizing.
WeylReport weyl_data(const Subspace& m);

}  // namespace c0
