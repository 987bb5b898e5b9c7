#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "c0/canonical.hpp"
#include "c0/divisor.hpp"

namespace c0 {

// Littlewood–Richardson coefficient c^lambda_{mu,nu}: the number of skew
// semistandard tableaux of shape lambda/mu and content nu whose reverse
// reading word (right to left, top to bottom) is a lattice word.  Counted by
// backtracking with lattice-prefix pruning.  Zero when mu is not contained in
// lambda or the sizes do not match.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Scans every triple with at most `rows` nonzero parts each, mu contained in
// lambda, |mu| + |nu| = |lambda| <= bound, and returns those with coefficient
// >= 2, in scan order.
std::vector<std::array<Partition, 3>> multiplicity_two_triples(int bound, int rows);

// Two-row scan: expected to be empty for every bound up to at least 12
// (two-row coefficients are 0 or 1).
std::vector<std::array<Partition, 3>> two_row_unique(int bound);

// Cross-check of the admissibility inequalities against positivity:
// admissible(t) must hold iff lr_coefficient(theta, alpha, beta) >= 1.
bool triple_vs_lr(const Triple& t);

}  // namespace c0
