#include "c0/oracle.hpp"

#include <map>

#include "c0/errors.hpp"

namespace c0 {

namespace {

constexpr long kSampleBound = 10000;  // coefficient set {-10^4, ..., 10^4}
constexpr int kExactModeMaxDim = 8;

// Builds the reduced symbol sum(coeffs[j] * basis[j]).
CommutantElement combine(const std::vector<CommutantElement>& basis,
                         const std::vector<GaussianRational>& coeffs, const ModelPair& p) {
  CommutantElement a;
  for (size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    a.a00 = a.a00 + basis[j].a00 * coeffs[j];
    a.a01low = a.a01low + basis[j].a01low * coeffs[j];
    a.a10 = a.a10 + basis[j].a10 * coeffs[j];
    a.a11 = a.a11 + basis[j].a11 * coeffs[j];
  }
  return a.reduced(p);
}

// Sparse multivariate polynomial over the Gaussian rationals, used only to
// expand small symbolic determinants; keys are exponent vectors.
using MPoly = std::map<std::vector<int>, GaussianRational>;

void mpoly_add_term(MPoly& f, std::vector<int> exps, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

// f * (linear form given by per-variable coefficients), variables shifted by
// one exponent.
MPoly mpoly_mul_linear(const MPoly& f, const std::vector<GaussianRational>& linear) {
  MPoly out;
  for (const auto& [exps, c] : f) {
    for (size_t v = 0; v < linear.size(); ++v) {
      if (linear[v].is_zero()) continue;
      std::vector<int> e = exps;
      e[v] += 1;
      mpoly_add_term(out, std::move(e), c * linear[v]);
    }
  }
  return out;
}

// det(sum_j t_j X_j) as a polynomial in t, by Laplace expansion along columns
// with memoization over row subsets.  Entry (r, c) is the linear form
// t -> sum_j X_j(r, c) t_j.
MPoly symbolic_determinant(const std::vector<Mat>& xs, int dim) {
  size_t nvars = xs.size();
  auto entry_linear = [&](int r, int c) {
    std::vector<GaussianRational> lin(nvars);
    for (size_t j = 0; j < nvars; ++j) lin[j] = xs[j].at(r, c);
    return lin;
  };
  std::vector<MPoly> memo(static_cast<size_t>(1) << dim);
  MPoly unit;
  unit[std::vector<int>(nvars, 0)] = GaussianRational(1);
  memo[0] = std::move(unit);
  for (unsigned mask = 1; mask < memo.size(); ++mask) {
    int col = __builtin_popcount(mask) - 1;
    MPoly acc;
    int position = 0;
    for (int r = 0; r < dim; ++r) {
      if (!(mask & (1u << r))) continue;
      MPoly term = mpoly_mul_linear(memo[mask & ~(1u << r)], entry_linear(r, col));
      GaussianRational sign((position + col) % 2 == 0 ? 1 : -1);
      for (const auto& [exps, c] : term) mpoly_add_term(acc, exps, c * sign);
      ++position;
    }
    memo[mask] = std::move(acc);
  }
  return memo.back();
}

std::string data_mismatch_reason(const JordanData& a, const JordanData& b) {
  if (!a.alpha.same_as(b.alpha))
    return "alpha: " + a.alpha.to_string() + " vs " + b.alpha.to_string();
  return "beta: " + a.beta.to_string() + " vs " + b.beta.to_string();
}

}  // namespace

std::vector<CommutantElement> constrained_commutant(const Subspace& m, const Subspace& mp) {
  if (m.pair() != mp.pair()) throw ThetaMismatch("constrained commutant across different pairs");
  const ModelPair& p = m.pair();
  std::vector<CommutantElement> basis = commutant_basis(p);
  int nvars = static_cast<int>(basis.size());

  // Row block per generator of M: the residual of psi(B_j) * g against Mp's
  // echelon basis is linear in the symbol, and vanishing for all generators
  // is exactly the mapping condition.
  Mat conditions(m.dim() * p.dim(), nvars);
  for (int j = 0; j < nvars; ++j) {
    Mat action = psi(basis[j], p);
    for (int g = 0; g < m.dim(); ++g) {
      Mat residual = reduce_against_basis(mp.basis(), action * m.basis().column(g));
      for (int i = 0; i < p.dim(); ++i) conditions.at(g * p.dim() + i, j) = residual.at(i, 0);
    }
  }
  Mat kernel = nullspace(conditions);
  std::vector<CommutantElement> out;
  out.reserve(static_cast<size_t>(kernel.cols()));
  for (int k = 0; k < kernel.cols(); ++k) {
    std::vector<GaussianRational> coeffs;
    for (int j = 0; j < nvars; ++j) coeffs.push_back(kernel.at(j, k));
    out.push_back(combine(basis, coeffs, p));
  }
  return out;
}

SearchResult find_quasisimilarity(const Subspace& m, const Subspace& mp, Rng& rng, int trials,
                                  bool exact_certificate) {
  if (m.pair() != mp.pair()) throw ThetaMismatch("witness search across different pairs");
  const ModelPair& p = m.pair();
  SearchResult result;
  if (m.dim() != mp.dim()) {
    result.reason = "dimension mismatch: " + std::to_string(m.dim()) + " vs " + std::to_string(mp.dim());
    result.certificate = Certificate::Exact;
    return result;
  }
  std::vector<CommutantElement> basis = constrained_commutant(m, mp);
  if (basis.empty()) {
    result.reason = "constrained commutant is zero";
    result.certificate = Certificate::Exact;
    return result;
  }
  Mat t = model_operator(p);

  auto attempt = [&](const std::vector<GaussianRational>& coeffs) -> std::optional<CommutantElement> {
    CommutantElement a = combine(basis, coeffs, p);
    if (a.is_zero()) return std::nullopt;
    Mat x = psi(a, p);
    if (rank(x) != p.dim()) return std::nullopt;
    // Exact re-verification of everything the caller relies on.
    if (!is_quasiaffinity(a, p))
      throw FalsificationError("invertible commutant element failed the quasiaffinity test");
    if (x * t != t * x) throw FalsificationError("psi image does not commute with the model operator");
    if (image(x, m) != mp) throw FalsificationError("witness does not map M onto Mp");
    return a.normalized();
  };

  auto run_trials = [&](int count) -> std::optional<CommutantElement> {
    for (int i = 0; i < count; ++i) {
      ++result.trials_used;
      std::vector<GaussianRational> coeffs;
      coeffs.reserve(basis.size());
      for (size_t j = 0; j < basis.size(); ++j)
        coeffs.push_back(GaussianRational(static_cast<int>(rng.uniform(-kSampleBound, kSampleBound))));
      if (auto w = attempt(coeffs)) return w;
    }
    return std::nullopt;
  };

  if (auto w = run_trials(trials)) {
    result.witness = std::move(w);
    result.certificate = Certificate::Exact;
    return result;
  }

  if (exact_certificate && static_cast<int>(basis.size()) <= kExactModeMaxDim) {
    std::vector<Mat> xs;
    xs.reserve(basis.size());
    for (const auto& b : basis) xs.push_back(psi(b, p));
    MPoly det = symbolic_determinant(xs, p.dim());
    if (det.empty()) {
      result.reason = "determinant vanishes identically on the constrained commutant";
      result.certificate = Certificate::Exact;
      return result;
    }
    // A nonzero determinant guarantees a witness; the random search finds it
    // with overwhelming probability, so simply keep drawing.
    if (auto w = run_trials(4 * trials)) {
      result.witness = std::move(w);
      result.certificate = Certificate::Exact;
      return result;
    }
  }
  result.reason = "no invertible element found in " + std::to_string(result.trials_used) + " trials";
  result.certificate = Certificate::Probabilistic;
  return result;
}

Verdict classify(const Subspace& m, const Subspace& mp, Rng& rng, int trials, bool exact_certificate) {
  if (m.pair() != mp.pair()) throw ThetaMismatch("classification across different pairs");
  Verdict v;
  JordanData dm = invariant_data(m);
  JordanData dmp = invariant_data(mp);
  if (dm != dmp) {
    v.kind = VerdictKind::Inequivalent;
    v.reason = data_mismatch_reason(dm, dmp);
    v.certificate = Certificate::Exact;
    return v;
  }
  SearchResult search = find_quasisimilarity(m, mp, rng, trials, exact_certificate);
  v.trials_used = search.trials_used;
  if (search.witness) {
    v.kind = VerdictKind::Equivalent;
    v.witness = std::move(search.witness);
    v.certificate = Certificate::Exact;
    return v;
  }
  v.kind = VerdictKind::Falsification;
  v.reason = "equal invariant data " + dm.to_string() + " but no witness: " + search.reason;
  v.certificate = search.certificate;
  return v;
}

CanonicalReduction reduce_to_canonical(const Subspace& m, Rng& rng, int trials, bool exact_certificate) {
  JordanData data = invariant_data(m);
  Triple t(m.pair(), data.alpha, data.beta);
  Subspace canonical = canonical_subspace(t);
  Verdict v = classify(m, canonical, rng, trials, exact_certificate);
  return {std::move(v), std::move(canonical)};
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::Inequivalent: return "inequivalent";
    case VerdictKind::Falsification: return "FALSIFICATION";
  }
  return "?";
}

std::string to_string(Certificate c) {
  return c == Certificate::Exact ? "exact" : "probabilistic";
}

}  // namespace c0
