#include "c0/jordan.hpp"

#include <algorithm>

#include "c0/errors.hpp"

namespace c0 {

namespace {
std::atomic<std::uint64_t> g_identity_checks{0};
std::atomic<std::uint64_t> g_identity_violations{0};
}  // namespace

Partition nilpotent_jordan_model(const Mat& a) {
  if (a.rows() != a.cols()) throw DomainError("Jordan model of a non-square matrix");
  int d = a.rows();
  if (d == 0) return Partition{};
  std::vector<int> ranks{d};  // rank(A^0)
  Mat power = a;
  while (!power.is_zero()) {
    ranks.push_back(rank(power));
    if (static_cast<int>(ranks.size()) > d + 1)
      throw NotNilpotent("rank sequence does not reach zero");
    power = power * a;
  }
  ranks.push_back(0);
  // m_k = rank(A^{k-1}) - rank(A^k) counts the blocks of size >= k and is
  // weakly decreasing; the partition is its conjugate.
  std::vector<int> m;
  for (size_t k = 1; k < ranks.size(); ++k) m.push_back(ranks[k - 1] - ranks[k]);
  std::vector<int> parts;
  for (int j = 0; j < (m.empty() ? 0 : m[0]); ++j) {
    int size = 0;
    for (int mk : m) {
      if (mk > j) ++size;
    }
    parts.push_back(size);
  }
  return Partition(std::move(parts));
}

JordanData invariant_data(const Subspace& m) {
  const ModelPair& p = m.pair();
  Partition alpha = nilpotent_jordan_model(restriction_matrix(m));
  Partition beta = nilpotent_jordan_model(compression(m));
  g_identity_checks.fetch_add(1, std::memory_order_relaxed);
  if (alpha.sum() + beta.sum() != p.dim()) {
    g_identity_violations.fetch_add(1, std::memory_order_relaxed);
    throw FalsificationError("restriction and compression models do not add up to the pair dimension on " +
                             m.to_string());
  }
  if (alpha.nonzero_count() > 2 || beta.nonzero_count() > 2) {
    g_identity_violations.fetch_add(1, std::memory_order_relaxed);
    throw FalsificationError("restriction or compression model exceeds multiplicity two on " + m.to_string());
  }
  return JordanData{alpha.padded(2), beta.padded(2)};
}

std::uint64_t dimension_identity_checks() { return g_identity_checks.load(); }
std::uint64_t dimension_identity_violations() { return g_identity_violations.load(); }

int minimal_function(const ModelVector& x, const ModelPair& p) {
  // T^k annihilates h_j exactly when k >= n_j - val(h_j), and the zero
  // component contributes n_j - n_j = 0.
  int k0 = p.n0 - valuation(x.h0, p.n0);
  int k1 = p.n1 - valuation(x.h1, p.n1);
  return std::max({k0, k1, 0});
}

ModelVector sample_maximal(const Subspace& m, Rng& rng) {
  if (m.dim() == 0) throw DomainError("maximal vector of the zero subspace requested");
  int target = nilpotent_jordan_model(restriction_matrix(m)).part(0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat coeffs(m.dim(), 1);
    for (int i = 0; i < m.dim(); ++i) coeffs.at(i, 0) = rng.small_int();
    ModelVector x = ModelVector::from_column(m.basis() * coeffs, m.pair());
    if (minimal_function(x, m.pair()) == target) return x;
  }
  throw RetriesExhausted("no maximal vector found in 64 attempts on " + m.to_string());
}

std::vector<GaussianRational> generic_combination(const std::vector<Poly>& fs, int n, Rng& rng) {
  int target = n;
  for (const Poly& f : fs) target = std::min(target, valuation(f, n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<GaussianRational> scalars;
    Poly sum;
    for (const Poly& f : fs) {
      GaussianRational a = rng.small_int();
      sum = sum + f * a;
      scalars.push_back(a);
    }
    if (valuation(sum, n) == target) return scalars;
  }
  throw RetriesExhausted("no generic combination found in 64 attempts");
}

int multiplicity(const Mat& a) {
  Partition model = nilpotent_jordan_model(a);
  int blocks = model.nonzero_count();
  if (blocks != nullspace(a).cols())
    throw FalsificationError("block count differs from the kernel dimension");
  return blocks;
}

bool adjoint_model_check(const ModelPair& p) {
  Partition model = nilpotent_jordan_model(model_operator(p).conj_transpose());
  return model.same_as(Partition{std::vector<int>{p.n0, p.n1}});
}

}  // namespace c0
