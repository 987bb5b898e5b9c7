#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c0/gaussian.hpp"

namespace c0 {

// Small dense matrix over the Gaussian rationals.  Everything here is exact:
// elimination pivots on the first nonzero entry, never on magnitude.
// Dimensions of zero are legal throughout (a basis of the zero space is a
// matrix with zero columns).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const GaussianRational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const GaussianRational& s) const;

  Mat transpose() const;
  Mat conj_transpose() const;
  Mat power(int k) const;  // square matrices, k >= 0

  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat column(int j) const;
  void set_column(int j, const Mat& v);
  // Columns of this matrix followed by the columns of o.
  Mat augment_columns(const Mat& o) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<GaussianRational> a_;
};

// Reduced row echelon form; fills pivot column indices in order.
Mat rref(Mat m, std::vector<int>* pivot_cols = nullptr);

int rank(const Mat& m);
bool is_invertible(const Mat& m);

// Unique reduced-column-echelon basis of the column span: each column's first
// nonzero coordinate is a leading 1, leading coordinates strictly increase
// left to right, and each leading coordinate is zero in every other column.
// Two column spans are equal iff these bases are equal matrices.
Mat column_space_basis(const Mat& m);

// Canonical basis (as columns, in reduced column echelon form) of ker m.
Mat nullspace(const Mat& m);

// Solves a * x = b for all columns of b at once; nullopt when inconsistent.
// Free variables are set to zero, so the solution is unique when a has full
// column rank.
std::optional<Mat> try_solve(const Mat& a, const Mat& b);

// Reduces v against a reduced-column-echelon basis: subtracts the unique
// combination of basis columns matching v on the pivot coordinates.  The
// result is zero iff v lies in the span, and depends linearly on v.
Mat reduce_against_basis(const Mat& basis, Mat v);

}  // namespace c0
