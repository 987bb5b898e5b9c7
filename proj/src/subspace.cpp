#include "c0/subspace.hpp"

#include <utility>

#include "c0/errors.hpp"

namespace c0 {

namespace {

Mat columns_of(const std::vector<ModelVector>& generators, const ModelPair& p) {
  Mat m(p.dim(), static_cast<int>(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j)
    m.set_column(static_cast<int>(j), generators[j].to_column(p));
  return m;
}

bool span_contains(const Mat& echelon_basis, const Mat& v) {
  return reduce_against_basis(echelon_basis, v).is_zero();
}

bool is_invariant_span(const Mat& echelon_basis, const ModelPair& p) {
  Mat t = model_operator(p);
  for (int j = 0; j < echelon_basis.cols(); ++j) {
    if (!span_contains(echelon_basis, t * echelon_basis.column(j))) return false;
  }
  return true;
}

std::string describe_generators(const std::vector<ModelVector>& generators) {
  std::string out;
  for (const auto& g : generators) {
    if (!out.empty()) out += ", ";
    out += "(h0=" + to_string(g.h0) + ", h1=" + to_string(g.h1) + ")";
  }
  return out.empty() ? "<none>" : out;
}

}  // namespace

Subspace Subspace::canonical_basis(const std::vector<ModelVector>& generators, const ModelPair& p) {
  Mat basis = column_space_basis(columns_of(generators, p));
  if (!is_invariant_span(basis, p)) {
    throw NotInvariant("span of generators " + describe_generators(generators) +
                       " is not invariant on " + p.to_string());
  }
  return Subspace(p, std::move(basis));
}

Subspace Subspace::orbit_span(const std::vector<ModelVector>& generators, const ModelPair& p) {
  Mat t = model_operator(p);
  Mat basis = column_space_basis(columns_of(generators, p));
  for (;;) {
    Mat grown = column_space_basis(basis.augment_columns(t * basis));
    if (grown == basis) break;
    basis = std::move(grown);
  }
  return Subspace(p, std::move(basis));
}

Subspace Subspace::from_columns(const Mat& columns, const ModelPair& p) {
  if (columns.cols() > 0 && columns.rows() != p.dim())
    throw DomainError("column height does not match the pair dimension");
  // Normalize the zero span to a (dim x 0) basis so row counts stay coherent.
  Mat basis = columns.cols() == 0 ? Mat(p.dim(), 0) : column_space_basis(columns);
  if (basis.cols() == 0) basis = Mat(p.dim(), 0);
  if (!is_invariant_span(basis, p)) {
    throw NotInvariant("column span is not invariant on " + p.to_string());
  }
  return Subspace(p, std::move(basis));
}

Subspace Subspace::whole(const ModelPair& p) {
  return Subspace(p, Mat::identity(p.dim()));
}

bool Subspace::contains(const Mat& column) const {
  return span_contains(basis_, column);
}

bool Subspace::contains(const Subspace& other) const {
  for (int j = 0; j < other.basis_.cols(); ++j) {
    if (!contains(other.basis_.column(j))) return false;
  }
  return true;
}

std::vector<ModelVector> Subspace::generators() const {
  std::vector<ModelVector> out;
  out.reserve(static_cast<size_t>(basis_.cols()));
  for (int j = 0; j < basis_.cols(); ++j)
    out.push_back(ModelVector::from_column(basis_.column(j), pair_));
  return out;
}

std::string Subspace::to_string() const {
  return "span of " + describe_generators(generators()) + " on " + pair_.to_string();
}

Mat restriction_matrix(const Subspace& m) {
  if (m.dim() == 0) return Mat(0, 0);
  Mat t = model_operator(m.pair());
  auto r = try_solve(m.basis(), t * m.basis());
  if (!r) throw FalsificationError("invariant subspace not closed under the model operator");
  return *r;
}

int coordinate_projection(const Subspace& m, int block) {
  if (block != 0 && block != 1) throw DomainError("block index must be 0 or 1");
  const ModelPair& p = m.pair();
  int n = block == 0 ? p.n0 : p.n1;
  int offset = block == 0 ? 0 : p.n0;
  Mat proj(n, m.dim());
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < n; ++i) proj.at(i, j) = m.basis().at(offset + i, j);
  Mat span = column_space_basis(proj);
  int exponent = n - span.cols();
  // The projection of an invariant subspace commutes with the block shift, so
  // its image must be the chain span{e_exponent, ..., e_{n-1}}; rebuild that
  // chain and insist on exact equality.
  Mat chain(n, span.cols());
  for (int j = 0; j < span.cols(); ++j) chain.at(exponent + j, j) = GaussianRational(1);
  if (span != chain)
    throw FalsificationError("coordinate projection of an invariant subspace is not a chain");
  return exponent;
}

Mat ortho_complement(const Subspace& m) {
  // x lies in the complement iff conj(basis)^T x = 0.
  Mat rows = m.basis().conj_transpose();
  Mat kernel = nullspace(rows);
  if (kernel.cols() == 0) return Mat(m.pair().dim(), 0);
  return kernel;
}

Mat compression(const Subspace& m) {
  Mat c = ortho_complement(m);
  if (c.cols() == 0) return Mat(0, 0);
  Mat t = model_operator(m.pair());
  Mat cstar = c.conj_transpose();
  Mat gram = cstar * c;
  auto k = try_solve(gram, cstar * (t * c));
  if (!k) throw FalsificationError("Gram matrix of an independent family is singular");
  return *k;
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.pair() != b.pair()) throw ThetaMismatch("join across different pairs");
  return Subspace::from_columns(a.basis().augment_columns(b.basis()), a.pair());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.pair() != b.pair()) throw ThetaMismatch("intersect across different pairs");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.pair());
  // Solutions of B_a u = B_b v give the intersection vectors B_a u.
  Mat stacked = a.basis().augment_columns(b.basis() * GaussianRational(-1));
  Mat kernel = nullspace(stacked);
  Mat vectors(a.pair().dim(), kernel.cols());
  for (int j = 0; j < kernel.cols(); ++j) {
    Mat u(a.dim(), 1);
    for (int i = 0; i < a.dim(); ++i) u.at(i, 0) = kernel.at(i, j);
    vectors.set_column(j, a.basis() * u);
  }
  return Subspace::from_columns(vectors, a.pair());
}

Subspace image(const Mat& x, const Subspace& m) {
  return Subspace::from_columns(x * m.basis(), m.pair());
}

namespace {

// Matrix of the adjoint of the restriction (to the span of basis) with
// respect to the inherited inner product: S = G^{-1} R^* G with G the Gram
// matrix of the basis and R the restriction matrix.
Mat gram_adjoint(const Mat& basis, const Mat& restriction) {
  Mat gram = basis.conj_transpose() * basis;
  auto s = try_solve(gram, restriction.conj_transpose() * gram);
  if (!s) throw FalsificationError("Gram matrix of an independent family is singular");
  return *s;
}

Mat orbit_of_coordinates(const Mat& op, Mat seed) {
  Mat basis = column_space_basis(seed);
  for (;;) {
    Mat grown = column_space_basis(basis.augment_columns(op * basis));
    if (grown == basis) return basis;
    basis = std::move(grown);
  }
}

int largest_part_of(const Mat& nilpotent);  // forward; defined via ranks below

int largest_part_of(const Mat& a) {
  // Index of nilpotency: least k with a^k = 0.
  Mat power = Mat::identity(a.rows());
  for (int k = 0; k <= a.rows(); ++k) {
    if (power.is_zero()) return k;
    power = power * a;
  }
  // Reached only when a is not nilpotent; callers guard against this.
  throw NotNilpotent("matrix is not nilpotent");
}

}  // namespace

SplitResult split(const Subspace& ambient, const Subspace& k_space, const ModelVector& k) {
  const ModelPair& p = ambient.pair();
  if (k_space.pair() != p) throw ThetaMismatch("split across different pairs");
  if (!ambient.contains(k_space)) throw HypothesisViolated("K is not contained in the ambient subspace");
  Mat k_col = k.to_column(p);
  if (!k_space.contains(k_col)) throw HypothesisViolated("k does not lie in K");

  Mat r_amb = restriction_matrix(ambient);
  Mat r_k = restriction_matrix(k_space);
  int top = largest_part_of(r_amb);
  int k_index = largest_part_of(r_k);
  if (k_space.dim() != k_index || k_index != top) {
    throw HypothesisViolated("K must be a single block of the largest ambient size");
  }

  // Cyclicity of k for the adjoint of the restriction to K.
  if (k_space.dim() > 0) {
    auto kappa = try_solve(k_space.basis(), k_col);
    if (!kappa) throw HypothesisViolated("k does not lie in K");
    Mat adj_k = gram_adjoint(k_space.basis(), r_k);
    if (orbit_of_coordinates(adj_k, *kappa).cols() != k_space.dim()) {
      throw NotCyclic("k is not cyclic for the adjoint of the restriction to K");
    }
  }

  // Adjoint orbit of k inside the ambient subspace.
  auto kappa_amb = try_solve(ambient.basis(), k_col);
  if (!kappa_amb) throw HypothesisViolated("k does not lie in the ambient subspace");
  Mat adj_amb = gram_adjoint(ambient.basis(), r_amb);
  Mat orbit = orbit_of_coordinates(adj_amb, *kappa_amb);
  Mat kprime = column_space_basis(ambient.basis() * orbit);

  // L: ambient coordinates x with <B x, B v> = 0 for all orbit columns v,
  // i.e. (V^* G) x = 0.
  Mat gram = ambient.basis().conj_transpose() * ambient.basis();
  Mat l_coords = nullspace(orbit.conj_transpose() * gram);
  Subspace l = Subspace::from_columns(ambient.basis() * l_coords, p);

  // Post-hoc verification of the split conclusions.
  if (join(k_space, l) != ambient)
    throw FalsificationError("split: K and L do not span the ambient subspace");
  if (intersect(k_space, l).dim() != 0)
    throw FalsificationError("split: K and L overlap");
  Mat r_l = restriction_matrix(l);
  int second = r_amb.rows() - top;  // ambient has at most two blocks
  if (l.dim() != second || (second > 0 && largest_part_of(r_l) != second))
    throw FalsificationError("split: L is not a single block of the second-largest size");
  return {std::move(kprime), std::move(l)};
}

std::vector<HyperinvariantDescriptor> hyperinvariant_descriptors(const ModelPair& p) {
  std::vector<HyperinvariantDescriptor> out;
  for (int p0 = 0; p0 <= p.n0; ++p0) {
    for (int p1 = 0; p1 <= p.n1; ++p1) {
      if (p1 <= p0 && p.n1 - p1 <= p.n0 - p0) out.push_back({p0, p1});
    }
  }
  return out;
}

Subspace hyperinvariant_subspace(const HyperinvariantDescriptor& d, const ModelPair& p) {
  if (d.p0 < 0 || d.p0 > p.n0 || d.p1 < 0 || d.p1 > p.n1)
    throw DomainError("descriptor out of range");
  if (d.p1 > d.p0 || p.n1 - d.p1 > p.n0 - d.p0)
    throw DomainError("descriptor violates the chain conditions");
  Mat cols(p.dim(), (p.n0 - d.p0) + (p.n1 - d.p1));
  int j = 0;
  for (int i = d.p0; i < p.n0; ++i) cols.at(i, j++) = GaussianRational(1);
  for (int i = d.p1; i < p.n1; ++i) cols.at(p.n0 + i, j++) = GaussianRational(1);
  return Subspace::from_columns(cols, p);
}

std::vector<Subspace> hyperinvariant_subspaces(const ModelPair& p) {
  std::vector<Subspace> out;
  for (const auto& d : hyperinvariant_descriptors(p)) out.push_back(hyperinvariant_subspace(d, p));
  return out;
}

Subspace multiplicity_one_subspace(int n, int t) {
  if (n < 1 || t < 0 || t > n) throw DomainError("need 0 <= t <= n and n >= 1");
  ModelPair p(n, 0);
  Mat cols(n, t);
  for (int j = 0; j < t; ++j) cols.at(n - t + j, j) = GaussianRational(1);
  Subspace m = Subspace::from_columns(cols, p);
  Mat op = model_operator(p);
  if (m.basis() != nullspace(op.power(t)))
    throw FalsificationError("chain subspace differs from the kernel of T^t");
  if (m.basis() != column_space_basis(op.power(n - t)))
    throw FalsificationError("chain subspace differs from the range of T^{n-t}");
  return m;
}

}  // namespace c0
