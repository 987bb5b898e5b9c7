#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "c0/io.hpp"
#include "c0/lr.hpp"

namespace c0 {

// All pairs with 1 <= n0 + n1 <= max_sum, in a fixed deterministic order.
std::vector<ModelPair> all_pairs(int max_sum);

// Deterministic corpus of invariant subspaces on a pair: every chain subspace
// (block-wise tail spans), the canonical subspace of every admissible triple,
// then seeded random orbit spans of one or two generators with coefficients
// in [-9, 9] until at least `budget` subspaces exist.
std::vector<Subspace> corpus_subspaces(const ModelPair& p, int budget, Rng& rng);

// Random reduced symbol with integer coefficients in [-9, 9].
CommutantElement random_symbol(const ModelPair& p, Rng& rng);
// Random quasiaffinity symbol (retries until the determinant has a constant
// term; cap 64).
CommutantElement random_quasiaffinity(const ModelPair& p, Rng& rng);

// Outcome of one suite on one pair; `violations` counts failed checks and the
// json carries the per-check tallies.
struct SuiteOutcome {
  nlohmann::json details;
  int checks = 0;
  int violations = 0;
};

SuiteOutcome classification_suite(const ModelPair& p, int budget, int trials, Rng& rng);
SuiteOutcome weyl_suite(const ModelPair& p, int budget, Rng& rng);
SuiteOutcome hyper_suite(const ModelPair& p, int budget, Rng& rng);
SuiteOutcome commutant_suite(const ModelPair& p, int budget, Rng& rng);
SuiteOutcome splitting_suite(const ModelPair& p, int budget, Rng& rng);
SuiteOutcome lr_suite();  // pair-independent

// Invariance of the datum under quasiaffinities: `count` samples on the pair.
SuiteOutcome datum_invariance_suite(const ModelPair& p, int count, Rng& rng);

// Runs a named suite over one pair or (when `pair` is empty) over all pairs
// with n0 + n1 <= 6, assembling the deterministic report body.
nlohmann::json run_suite(const std::string& name, const std::optional<ModelPair>& pair,
                         const RunConfig& config, bool* passed);

}  // namespace c0
