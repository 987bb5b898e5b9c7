#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "c0/divisor.hpp"
#include "c0/rng.hpp"
#include "c0/subspace.hpp"

namespace c0 {

// Jordan model of a nilpotent matrix: block sizes as a weakly decreasing
// partition, computed from the exact rank sequence
// #{j : part_j >= k} = rank(A^{k-1}) - rank(A^k).
// Throws NotNilpotent when A^dim != 0.
Partition nilpotent_jordan_model(const Mat& a);

// The pair of Jordan models attached to an invariant subspace: alpha from the
// restriction, beta from the compression to the orthocomplement.  Both are
// stored padded to two parts (zeros retained).
struct JordanData {
  Partition alpha;
  Partition beta;

  bool operator==(const JordanData& o) const {
    return alpha.same_as(o.alpha) && beta.same_as(o.beta);
  }
  bool operator!=(const JordanData& o) const { return !(*this == o); }
  std::string to_string() const { return "alpha=" + alpha.to_string() + " beta=" + beta.to_string(); }
};

// Computes (alpha, beta) for M.  Asserts, on every call, the dimension
// identity |alpha| + |beta| = n0 + n1 and that both models have at most two
// nonzero parts; a violation throws FalsificationError.  The check counters
// are global and thread-safe.
JordanData invariant_data(const Subspace& m);

std::uint64_t dimension_identity_checks();
std::uint64_t dimension_identity_violations();

// Least k >= 0 with T^k x = 0.
int minimal_function(const ModelVector& x, const ModelPair& p);

// Samples x in M (integer coordinates in [-9, 9] against M's basis) whose
// minimal exponent equals the largest part of the model of the restriction,
// i.e. a maximal vector of M.  Retry cap 64, then RetriesExhausted.
// Precondition: M != 0.
ModelVector sample_maximal(const Subspace& m, Rng& rng);

// Samples integer scalars a_j in [-9, 9] such that valuation(sum a_j f_j, n)
// equals min_j valuation(f_j, n).  Retry cap 64.
std::vector<GaussianRational> generic_combination(const std::vector<Poly>& fs, int n, Rng& rng);

// Number of Jordan blocks (= dim ker A, asserted).
int multiplicity(const Mat& a);

// True iff the model of the conjugate transpose of the model operator is
// (n0, n1) again.
bool adjoint_model_check(const ModelPair& p);

}  // namespace c0
