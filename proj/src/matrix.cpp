#include "c0/matrix.hpp"

#include <utility>

#include "c0/errors.hpp"

namespace c0 {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const GaussianRational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum dimension mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference dimension mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const GaussianRational& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::conj_transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

Mat Mat::power(int k) const {
  if (rows_ != cols_) throw DomainError("power of non-square matrix");
  if (k < 0) throw DomainError("negative matrix power");
  Mat r = identity(rows_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::column(int j) const {
  Mat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

void Mat::set_column(int j, const Mat& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Mat Mat::augment_columns(const Mat& o) const {
  if (cols_ != 0 && o.cols() != 0 && rows_ != o.rows())
    throw DomainError("augment dimension mismatch");
  int r = cols_ != 0 ? rows_ : o.rows();
  if (cols_ != 0 && o.cols() != 0) r = rows_;
  Mat m(r, cols_ + o.cols());
  for (int i = 0; i < r && cols_ > 0; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < r && o.cols() > 0; ++i)
    for (int j = 0; j < o.cols(); ++j) m.at(i, cols_ + j) = o.at(i, j);
  return m;
}

std::string Mat::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? ", " : "") + c0::to_string(at(i, j));
  }
  return out + "]";
}

Mat rref(Mat m, std::vector<int>* pivot_cols) {
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int pivot = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    GaussianRational inv = inverse(m.at(lead, c));
    for (int j = c; j < m.cols(); ++j) m.at(lead, j) = m.at(lead, j) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      GaussianRational f = m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(lead, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++lead;
  }
  return m;
}

int rank(const Mat& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat column_space_basis(const Mat& m) {
  std::vector<int> pivots;
  Mat r = rref(m.transpose(), &pivots);
  Mat basis(m.rows(), static_cast<int>(pivots.size()));
  for (int k = 0; k < basis.cols(); ++k)
    for (int i = 0; i < m.rows(); ++i) basis.at(i, k) = r.at(k, i);
  return basis;
}

Mat nullspace(const Mat& m) {
  std::vector<int> pivots;
  Mat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Mat basis(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(f, static_cast<int>(k)) = GaussianRational(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      basis.at(pivots[i], static_cast<int>(k)) = -r.at(static_cast<int>(i), f);
  }
  // Canonicalize so equal kernels compare equal as matrices.
  return column_space_basis(basis);
}

std::optional<Mat> try_solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DomainError("solve dimension mismatch");
  std::vector<int> pivots;
  Mat r = rref(a.augment_columns(b), &pivots);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent system
  Mat x(a.cols(), b.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(static_cast<int>(i), a.cols() + j);
  return x;
}

Mat reduce_against_basis(const Mat& basis, Mat v) {
  for (int k = 0; k < basis.cols(); ++k) {
    int pivot = -1;
    for (int i = 0; i < basis.rows(); ++i) {
      if (!basis.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    GaussianRational f = v.at(pivot, 0);  // basis.at(pivot, k) == 1 in echelon form
    if (f.is_zero()) continue;
    for (int i = 0; i < basis.rows(); ++i) v.at(i, 0) -= f * basis.at(i, k);
  }
  return v;
}

}  // namespace c0
