#include "c0/lr.hpp"

namespace c0 {

namespace {

struct Cell {
  int row;
  int col;
};

// Backtracking counter over the cells in reverse reading order (top row to
// bottom, right to left inside a row), which makes the lattice condition a
// prefix property: after each placement of v, #v placed stays <= #(v-1).
class LatticeCounter {
 public:
  LatticeCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : nu_(nu.normalized()), mu_(mu) {
    Partition lam = lambda.normalized();
    rows_ = static_cast<int>(lam.parts.size());
    width_ = rows_ ? lam.parts[0] : 0;
    filling_.assign(static_cast<size_t>(rows_), std::vector<int>(static_cast<size_t>(width_), 0));
    for (int r = 0; r < rows_; ++r) {
      for (int c = lam.part(r) - 1; c >= mu_.part(r); --c) cells_.push_back({r, c});
    }
    counts_.assign(nu_.parts.size() + 1, 0);
  }

  std::uint64_t count() { return descend(0); }

 private:
  std::uint64_t descend(size_t k) {
    if (k == cells_.size()) return 1;
    const Cell cell = cells_[k];
    std::uint64_t total = 0;
    for (int v = 1; v <= static_cast<int>(nu_.parts.size()); ++v) {
      if (counts_[static_cast<size_t>(v)] >= nu_.parts[static_cast<size_t>(v - 1)]) continue;
      // Lattice prefix: placing v keeps #v <= #(v-1).
      if (v > 1 && counts_[static_cast<size_t>(v)] >= counts_[static_cast<size_t>(v - 1)]) continue;
      // Weakly increasing along the row (the right neighbour was placed first).
      if (cell.col + 1 < width_ && in_shape(cell.row, cell.col + 1) &&
          v > filling_[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col + 1)])
        continue;
      // Strictly increasing down the column.
      if (cell.row > 0 && in_shape(cell.row - 1, cell.col) &&
          v <= filling_[static_cast<size_t>(cell.row - 1)][static_cast<size_t>(cell.col)])
        continue;
      filling_[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] = v;
      ++counts_[static_cast<size_t>(v)];
      total += descend(k + 1);
      --counts_[static_cast<size_t>(v)];
      filling_[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] = 0;
    }
    return total;
  }

  bool in_shape(int r, int c) const {
    // Both neighbours queried here (right, above) come earlier in the filling
    // order, so a skew-shape cell is already filled with a positive value and
    // anything outside the shape (mu region or past lambda) is still zero.
    return filling_[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0;
  }

  Partition nu_;
  Partition mu_;
  int rows_ = 0;
  int width_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> counts_;
};

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Partition lam = lambda.normalized(), m = mu.normalized(), n = nu.normalized();
  if (!m.contained_in(lam)) return 0;
  if (lam.sum() != m.sum() + n.sum()) return 0;
  if (n.parts.empty()) return lam.same_as(m) ? 1 : 0;
  return LatticeCounter(lam, m, n).count();
}

std::vector<std::array<Partition, 3>> multiplicity_two_triples(int bound, int rows) {
  std::vector<std::array<Partition, 3>> found;
  // Enumerates partitions with at most `rows` parts and sum <= bound.
  auto enumerate = [&](int total_cap, auto&& consume) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int cap, int depth) -> void {
      consume(Partition(parts));
      if (depth == rows) return;
      for (int next = std::min(remaining, cap); next >= 1; --next) {
        parts.push_back(next);
        self(self, remaining - next, next, depth + 1);
        parts.pop_back();
      }
    };
    rec(rec, total_cap, total_cap, 0);
  };
  enumerate(bound, [&](const Partition& lambda) {
    if (lambda.sum() == 0) return;
    enumerate(lambda.sum(), [&](const Partition& mu) {
      if (!mu.contained_in(lambda)) return;
      int rest = lambda.sum() - mu.sum();
      enumerate(rest, [&](const Partition& nu) {
        if (nu.sum() != rest) return;
        if (lr_coefficient(lambda, mu, nu) >= 2) found.push_back({lambda, mu, nu});
      });
    });
  });
  return found;
}

std::vector<std::array<Partition, 3>> two_row_unique(int bound) {
  return multiplicity_two_triples(bound, 2);
}

bool triple_vs_lr(const Triple& t) {
  Partition theta{std::vector<int>{t.theta.n0, t.theta.n1}};
  bool positive = lr_coefficient(theta, t.alpha, t.beta) >= 1;
  return admissible(t) == positive;
}

}  // namespace c0
