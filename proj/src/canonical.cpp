#include "c0/canonical.hpp"

#include <algorithm>

#include "c0/errors.hpp"

namespace c0 {

Triple::Triple(ModelPair t, Partition a, Partition b)
    : theta(t), alpha(a.padded(2)), beta(b.padded(2)) {
  if (alpha.nonzero_count() > 2 || beta.nonzero_count() > 2)
    throw DomainError("triple models must have at most two parts");
  if (a0() > theta.n0 || a1() > theta.n1 || b0() > theta.n0 || b1() > theta.n1)
    throw DomainError("triple parts exceed the block sizes of " + theta.to_string());
}

std::string Triple::to_string() const {
  return "theta=" + theta.to_string() + " alpha=" + alpha.to_string() + " beta=" + beta.to_string();
}

std::string admissible_failure(const Triple& t) {
  if (t.theta.n0 + t.theta.n1 != t.a0() + t.a1() + t.b0() + t.b1())
    return "n0 + n1 == a0 + a1 + b0 + b1";
  if (t.theta.n1 - t.b1() > t.a0()) return "n1 - b1 <= a0";
  if (t.b1() > std::min(t.theta.n0 - t.a0(), t.theta.n1 - t.a1()))
    return "b1 <= min(n0 - a0, n1 - a1)";
  return "";
}

bool admissible(const Triple& t) { return admissible_failure(t).empty(); }

std::vector<Triple> admissible_triples(const ModelPair& p) {
  std::vector<Triple> out;
  for (int a0 = 0; a0 <= p.n0; ++a0) {
    for (int a1 = 0; a1 <= std::min(a0, p.n1); ++a1) {
      for (int b1 = 0; b1 <= p.n1; ++b1) {
        int b0 = p.dim() - a0 - a1 - b1;
        if (b0 < b1 || b0 > p.n0) continue;
        Triple t(p, Partition{a0, a1}, Partition{b0, b1});
        if (admissible(t)) out.push_back(t);
      }
    }
  }
  return out;
}

namespace {

// P z^m inside a block of size n: the monomial survives iff m < n.
Poly projected_monomial(int m, int n) {
  return m < n ? Poly::monomial(m) : Poly::zero();
}

bool chain_conditions(const ModelPair& p, int m0, int m1) {
  return m1 <= m0 && p.n1 - m1 <= p.n0 - m0;
}

}  // namespace

Subspace canonical_subspace(const Triple& t) {
  std::string failed = admissible_failure(t);
  if (!failed.empty()) throw NotAdmissible(failed);
  const ModelPair& p = t.theta;
  ModelVector xi(projected_monomial(p.n0 - t.a0(), p.n0), projected_monomial(t.b1(), p.n1));
  ModelVector eta(Poly::zero(), projected_monomial(p.n1 - t.a1(), p.n1));
  Subspace n = Subspace::orbit_span({xi, eta}, p);
  if (coordinate_projection(n, 0) != p.n0 - t.a0() || coordinate_projection(n, 1) != t.b1())
    throw FalsificationError("canonical subspace has wrong projection exponents for " + t.to_string());
  JordanData data = invariant_data(n);
  if (!(data == JordanData{t.alpha, t.beta}))
    throw FalsificationError("canonical subspace realizes " + data.to_string() +
                             " instead of " + t.to_string());
  return n;
}

HyperNormalization hyper_normalize(const Subspace& m, Rng& rng) {
  const ModelPair& p = m.pair();
  int m0 = coordinate_projection(m, 0);
  int m1 = coordinate_projection(m, 1);
  if (chain_conditions(p, m0, m1)) {
    return {identity_symbol(p), m, m0, m1};
  }
  // Out-of-position subspaces are nonzero and the pair has two real blocks
  // (with n1 == 0 the conditions hold trivially), so a maximal vector exists
  // and the scalar symbol has all four slots.
  JordanData before = invariant_data(m);
  int gap = p.n0 - p.n1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModelVector xi = sample_maximal(m, rng);
    GaussianRational c00 = GaussianRational(static_cast<int>(rng.nonzero_uniform(-9, 9)));
    GaussianRational c01 = GaussianRational(static_cast<int>(rng.nonzero_uniform(-9, 9)));
    GaussianRational c10 = GaussianRational(static_cast<int>(rng.nonzero_uniform(-9, 9)));
    GaussianRational c11 = GaussianRational(static_cast<int>(rng.nonzero_uniform(-9, 9)));

    Poly top = xi.h0 * c00 + xi.h1.shifted(gap) * c01;
    int top_target = std::min(valuation(xi.h0, p.n0),
                              xi.h1.is_zero() ? p.n0 : std::min(gap + valuation(xi.h1, p.n1), p.n0));
    Poly bottom = xi.h0 * c10 + xi.h1 * c11;
    int bottom_target = std::min(valuation(xi.h0, p.n1), valuation(xi.h1, p.n1));
    Poly det = Poly{c00 * c11} - Poly{c10 * c01}.shifted(gap);
    if (valuation(top, p.n0) != top_target) continue;
    if (valuation(bottom, p.n1) != bottom_target) continue;
    if (valuation(det, p.n0) != 0) continue;

    CommutantElement a{Poly{c00}, Poly{c01}, Poly{c10}, Poly{c11}};
    if (!is_quasiaffinity(a, p))
      throw FalsificationError("scalar symbol with unit determinant is not a quasiaffinity");
    Subspace moved = image(psi(a, p), m);
    int new0 = coordinate_projection(moved, 0);
    int new1 = coordinate_projection(moved, 1);
    if (!chain_conditions(p, new0, new1)) continue;
    if (invariant_data(moved) != before)
      throw FalsificationError("quasiaffinity image changed the invariant data of " + m.to_string());
    return {a, moved, new0, new1};
  }
  throw RetriesExhausted("hyper-normalization failed 64 scalar draws on " + m.to_string());
}

WeylReport weyl_data(const Subspace& m) {
  const ModelPair& p = m.pair();
  int m0 = coordinate_projection(m, 0);
  int m1 = coordinate_projection(m, 1);
  if (!chain_conditions(p, m0, m1)) {
    throw HypothesisViolated("projection exponents (" + std::to_string(m0) + "," + std::to_string(m1) +
                             ") violate the chain conditions on " + p.to_string());
  }
  WeylReport r;
  r.data = invariant_data(m);
  r.m0 = m0;
  r.m1 = m1;
  int a0 = r.data.alpha.part(0), a1 = r.data.alpha.part(1);
  int b1 = r.data.beta.part(1);
  r.dimension_identity = r.data.alpha.sum() + r.data.beta.sum() == p.dim();
  r.projection_identities = (m0 == p.n0 - a0) && (m1 == b1);
  r.restriction_bound = p.n1 - b1 <= a0;
  r.compression_bound = b1 <= std::min(p.n0 - a0, p.n1 - a1);
  return r;
}

}  // namespace c0
