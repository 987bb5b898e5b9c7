// Exact linear algebra: echelon forms, rank, kernels, solving, membership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c0/errors.hpp"
#include "c0/matrix.hpp"
#include "c0/rng.hpp"

using namespace c0;

namespace {

Mat from_rows(std::vector<std::vector<int>> rows) {
  Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = GaussianRational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

Mat random_matrix(int rows, int cols, Rng& rng) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.small_int(-5, 5);
  return m;
}

}  // namespace

TEST_CASE("rref reaches the identity on an invertible matrix") {
  Mat m = from_rows({{2, 1}, {1, 1}});
  std::vector<int> pivots;
  CHECK(rref(m, &pivots) == Mat::identity(2));
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(rank(m) == 2);
  CHECK(is_invertible(m));
}

TEST_CASE("rref handles rank deficiency and zero sizes") {
  Mat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 2, 4}});
  std::vector<int> pivots;
  Mat r = rref(m, &pivots);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(rank(m) == 2);
  CHECK_FALSE(is_invertible(m));
  CHECK(r.at(0, 1) == GaussianRational(2));
  CHECK(rank(Mat(0, 0)) == 0);
  CHECK(rank(Mat(3, 0)) == 0);
  CHECK(rank(Mat(0, 3)) == 0);
  CHECK(is_invertible(Mat(0, 0)));  // empty matrix is the identity on {0}
}

TEST_CASE("column space basis is a canonical form of the span") {
  // Two spanning sets of the same plane in Q^3 must produce identical bases.
  Mat a = from_rows({{1, 2}, {1, 3}, {0, 0}});
  Mat b = from_rows({{3, 1}, {4, 2}, {0, 0}});
  CHECK(column_space_basis(a) == column_space_basis(b));
  CHECK(column_space_basis(a).cols() == 2);
  // A dependent column is dropped.
  Mat c = from_rows({{1, 2, 3}, {1, 3, 4}, {0, 0, 0}});
  CHECK(column_space_basis(c) == column_space_basis(a));
  CHECK(column_space_basis(Mat(3, 0)).cols() == 0);
}

TEST_CASE("nullspace is exact and canonical") {
  Mat m = from_rows({{1, 2, 0}, {0, 0, 1}});
  Mat k = nullspace(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(column_space_basis(k) == k);
  CHECK(nullspace(Mat::identity(3)).cols() == 0);
  Mat z(2, 3);
  CHECK(nullspace(z) == Mat::identity(3));
}

TEST_CASE("try_solve solves consistent systems and rejects inconsistent ones") {
  Mat a = from_rows({{1, 1}, {0, 1}, {0, 0}});
  Mat b = from_rows({{3}, {2}, {0}});
  auto x = try_solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK(x->at(0, 0) == GaussianRational(1));
  CHECK(x->at(1, 0) == GaussianRational(2));

  Mat bad = from_rows({{3}, {2}, {1}});
  CHECK_FALSE(try_solve(a, bad).has_value());

  // Underdetermined: free variables are zero, so a*x == b still holds.
  Mat wide = from_rows({{1, 2, 3}});
  Mat rhs = from_rows({{6}});
  auto y = try_solve(wide, rhs);
  REQUIRE(y.has_value());
  CHECK(wide * *y == rhs);
}

TEST_CASE("reduce_against_basis decides membership linearly") {
  Mat basis = column_space_basis(from_rows({{1, 0}, {0, 1}, {1, 1}}));
  Mat inside = from_rows({{2}, {3}, {5}});
  Mat outside = from_rows({{1}, {1}, {1}});
  CHECK(reduce_against_basis(basis, inside).is_zero());
  CHECK_FALSE(reduce_against_basis(basis, outside).is_zero());
  // Linearity: r(u + v) == r(u) + r(v).
  Mat u = from_rows({{1}, {4}, {2}});
  Mat v = from_rows({{0}, {1}, {7}});
  CHECK(reduce_against_basis(basis, u + v) ==
        reduce_against_basis(basis, u) + reduce_against_basis(basis, v));
}

TEST_CASE("rank and kernel dimensions agree on random matrices") {
  Rng rng(20240518);
  for (int round = 0; round < 200; ++round) {
    int rows = static_cast<int>(rng.uniform(0, 5));
    int cols = static_cast<int>(rng.uniform(0, 5));
    Mat m = random_matrix(rows, cols, rng);
    int r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(r == rank(m.conj_transpose()));
    Mat k = nullspace(m);
    CHECK(r + k.cols() == cols);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    // The canonical span basis never changes the span.
    Mat cb = column_space_basis(m);
    CHECK(rank(cb) == r);
    CHECK(rank(m.augment_columns(cb)) == r);
  }
}

TEST_CASE("conjugate transpose conjugates entries") {
  Mat m(1, 2);
  m.at(0, 0) = GaussianRational(Rational(1), Rational(2));
  m.at(0, 1) = GaussianRational(3);
  Mat h = m.conj_transpose();
  CHECK(h.rows() == 2);
  CHECK(h.at(0, 0) == GaussianRational(Rational(1), Rational(-2)));
  CHECK(h.at(1, 0) == GaussianRational(3));
}

TEST_CASE("power and shape guards") {
  Mat m = from_rows({{0, 0}, {1, 0}});
  CHECK(m.power(0) == Mat::identity(2));
  CHECK(m.power(2).is_zero());
  CHECK_THROWS_AS(from_rows({{1, 2}}) * from_rows({{1, 2}}), DomainError);
  CHECK_THROWS_AS(from_rows({{1, 2}}) + from_rows({{1}, {2}}), DomainError);
  CHECK_THROWS_AS(from_rows({{1, 2}}).power(2), DomainError);
}
