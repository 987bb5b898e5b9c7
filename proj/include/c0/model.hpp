#pragma once

#include <string>
#include <vector>

#include "c0/matrix.hpp"
#include "c0/poly.hpp"

namespace c0 {

// Two-block model pair: block sizes n0 >= n1 >= 0 with n0 + n1 >= 1.  The
// ambient space is spanned by e_0..e_{n0-1} (block 0) followed by
// f_0..f_{n1-1} (block 1), and the model operator shifts each block down:
// e_k -> e_{k+1}, f_k -> f_{k+1}, top elements to zero.
struct ModelPair {
  int n0;
  int n1;

  ModelPair(int big, int small);
  int dim() const { return n0 + n1; }

  bool operator==(const ModelPair& o) const { return n0 == o.n0 && n1 == o.n1; }
  bool operator!=(const ModelPair& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Ambient vector written as a pair of polynomials, deg h0 < n0, deg h1 < n1.
struct ModelVector {
  Poly h0;
  Poly h1;

  ModelVector() = default;
  ModelVector(Poly p0, Poly p1) : h0(std::move(p0)), h1(std::move(p1)) {}

  // Enforces the degree bounds for the given pair.
  static ModelVector checked(Poly p0, Poly p1, const ModelPair& p);

  bool is_zero() const { return h0.is_zero() && h1.is_zero(); }
  Mat to_column(const ModelPair& p) const;
  static ModelVector from_column(const Mat& col, const ModelPair& p);

  bool operator==(const ModelVector& o) const { return h0 == o.h0 && h1 == o.h1; }
};

// n x n single-block lower shift: e_k -> e_{k+1} for k < n-1, e_{n-1} -> 0.
Mat jordan_block_matrix(int n);

// Block diagonal lower shift for the pair.
Mat model_operator(const ModelPair& p);

// u(T): block-diagonal action of the polynomial u, reduced mod z^{n_j} on
// block j.
Mat poly_calculus(const Poly& u, const ModelPair& p);

// Reduced symbol of a commutant element.  The full 2x2 polynomial symbol is
//   [ a00              z^{n0-n1} * a01low ]
//   [ a10              a11                ]
// with deg a00 < n0 and deg a01low, a10, a11 < n1; the off-diagonal factor
// z^{n0-n1} is exactly the divisibility constraint that makes the symbol act
// on the pair, and the degree caps quotient out the kernel of the action.
struct CommutantElement {
  Poly a00;
  Poly a01low;
  Poly a10;
  Poly a11;

  bool is_zero() const {
    return a00.is_zero() && a01low.is_zero() && a10.is_zero() && a11.is_zero();
  }

  // Reduces all four entries to their degree caps.
  CommutantElement reduced(const ModelPair& p) const;

  // Scales so the first nonzero coefficient (scanning a00, a01low, a10, a11)
  // becomes 1; the zero element is returned unchanged.
  CommutantElement normalized() const;

  bool operator==(const CommutantElement& o) const {
    return a00 == o.a00 && a01low == o.a01low && a10 == o.a10 && a11 == o.a11;
  }
  std::string to_string() const;
};

CommutantElement identity_symbol(const ModelPair& p);

// Canonical monomial basis of the reduced symbols, length n0 + 3*n1, ordered
// a00 block then a01low, a10, a11, each by ascending exponent.  The images
// under psi span the full commutant of the model operator.
std::vector<CommutantElement> commutant_basis(const ModelPair& p);

// The operator the symbol acts as: (g, f) -> (a00*g + z^{n0-n1}*a01low*f
// truncated into block 0, a10*g + a11*f truncated into block 1).
Mat psi(const CommutantElement& a, const ModelPair& p);

// Symbol product followed by reduction; psi is multiplicative on it.
CommutantElement mul_symbols(const CommutantElement& a, const CommutantElement& b, const ModelPair& p);

// det A = a00*a11 - z^{n0-n1}*a01low*a10, reduced mod z^{n0}.
Poly det_symbol(const CommutantElement& a, const ModelPair& p);

// Pointwise adjugate A' = [a11, -a01; -a10, a00] (reduced) together with
// det A; psi(A) * psi(A') = psi(A') * psi(A) = (det A)(T).
struct Adjugate {
  CommutantElement prime;
  Poly det;
};
Adjugate adjugate(const CommutantElement& a, const ModelPair& p);

// True iff psi(A) is injective (equivalently surjective; equivalently the
// constant term of det A is nonzero).
bool is_quasiaffinity(const CommutantElement& a, const ModelPair& p);

}  // namespace c0
