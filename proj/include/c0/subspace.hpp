#pragma once

#include <string>
#include <vector>

#include "c0/matrix.hpp"
#include "c0/model.hpp"

namespace c0 {

// Invariant subspace of a model pair, held as the unique reduced-column-
// echelon basis of its span.  Construction always canonicalizes and always
// checks invariance under the model operator, so two Subspace values are
// equal iff they are the same subspace.
class Subspace {
 public:
  // Span of the given generators; throws NotInvariant if the span is not
  // fixed by the model operator.
  static Subspace canonical_basis(const std::vector<ModelVector>& generators, const ModelPair& p);

  // Smallest invariant subspace containing the generators (closure of the
  // span under the model operator).
  static Subspace orbit_span(const std::vector<ModelVector>& generators, const ModelPair& p);

  // Span of the columns; throws NotInvariant when the span is not invariant.
  static Subspace from_columns(const Mat& columns, const ModelPair& p);

  static Subspace zero(const ModelPair& p) { return orbit_span({}, p); }
  static Subspace whole(const ModelPair& p);

  const ModelPair& pair() const { return pair_; }
  const Mat& basis() const { return basis_; }
  int dim() const { return basis_.cols(); }

  bool contains(const Mat& column) const;
  bool contains(const Subspace& other) const;
  std::vector<ModelVector> generators() const;

  bool operator==(const Subspace& o) const { return pair_ == o.pair_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Subspace(ModelPair p, Mat basis) : pair_(p), basis_(std::move(basis)) {}
  ModelPair pair_;
  Mat basis_;
};

// Matrix of the restriction of the model operator to M, in M's basis.
Mat restriction_matrix(const Subspace& m);

// Least exponent present in the block-j projection of M; n_j when the
// projection is zero.  The projection is always a chain span
// {e_m, ..., e_{n_j - 1}}; this is re-derived and asserted on every call.
int coordinate_projection(const Subspace& m, int block);

// Canonical basis of the orthocomplement of M under <x,y> = sum x_k conj(y_k).
Mat ortho_complement(const Subspace& m);

// Matrix of the compression of the model operator to the orthocomplement of
// M, in the canonical complement basis, via an exact Gram solve.
Mat compression(const Subspace& m);

Subspace join(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Image of M under an ambient matrix that commutes with the model operator.
Subspace image(const Mat& x, const Subspace& m);

// Splits the ambient invariant subspace along a maximal single-block K:
// preconditions (checked): K inside ambient, the restriction to K is a single
// block whose size is the largest block of the restriction to ambient, k in K
// and cyclic for the adjoint of the restriction to K (else NotCyclic).
// Returns the adjoint orbit of k inside ambient (a plain canonical basis: it
// need not be forward-invariant) and its orthocomplement L inside ambient,
// which always is.  Verifies join(K, L) = ambient, K cap L = 0, and that the
// restriction to L is a single block of the second-largest size.
struct SplitResult {
  Mat kprime;   // canonical basis of the ambient-adjoint orbit of k
  Subspace l;   // ambient minus kprime, invariant
};
SplitResult split(const Subspace& ambient, const Subspace& k_space, const ModelVector& k);

// Descriptor of a hyperinvariant subspace: the chain span
// {e_{p0},...,e_{n0-1}} + {f_{p1},...,f_{n1-1}} with p1 <= p0 and
// n1 - p1 <= n0 - p0.
struct HyperinvariantDescriptor {
  int p0;
  int p1;
  bool operator==(const HyperinvariantDescriptor& o) const { return p0 == o.p0 && p1 == o.p1; }
};

std::vector<HyperinvariantDescriptor> hyperinvariant_descriptors(const ModelPair& p);
Subspace hyperinvariant_subspace(const HyperinvariantDescriptor& d, const ModelPair& p);
std::vector<Subspace> hyperinvariant_subspaces(const ModelPair& p);

// On the single-block pair (n, 0): span{e_{n-t}, ..., e_{n-1}}, asserted equal
// to ker T^t and to the column span of T^{n-t}.
Subspace multiplicity_one_subspace(int n, int t);

}  // namespace c0
