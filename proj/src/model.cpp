#include "c0/model.hpp"

#include "c0/errors.hpp"

namespace c0 {

ModelPair::ModelPair(int big, int small) : n0(big), n1(small) {
  if (n1 < 0 || n0 < n1 || n0 + n1 < 1)
    throw DomainError("model pair requires n0 >= n1 >= 0 and n0 + n1 >= 1");
}

std::string ModelPair::to_string() const {
  return "(" + std::to_string(n0) + "," + std::to_string(n1) + ")";
}

ModelVector ModelVector::checked(Poly p0, Poly p1, const ModelPair& p) {
  if (p0.degree() >= p.n0 || p1.degree() >= p.n1)
    throw DomainError("model vector exceeds the degree bounds of " + p.to_string());
  return ModelVector(std::move(p0), std::move(p1));
}

Mat ModelVector::to_column(const ModelPair& p) const {
  if (h0.degree() >= p.n0 || h1.degree() >= p.n1)
    throw DomainError("model vector exceeds the degree bounds of " + p.to_string());
  Mat col(p.dim(), 1);
  for (int k = 0; k < p.n0; ++k) col.at(k, 0) = h0.at(k);
  for (int k = 0; k < p.n1; ++k) col.at(p.n0 + k, 0) = h1.at(k);
  return col;
}

ModelVector ModelVector::from_column(const Mat& col, const ModelPair& p) {
  if (col.rows() != p.dim() || col.cols() != 1)
    throw DomainError("column dimension does not match the pair");
  std::vector<GaussianRational> c0v, c1v;
  for (int k = 0; k < p.n0; ++k) c0v.push_back(col.at(k, 0));
  for (int k = 0; k < p.n1; ++k) c1v.push_back(col.at(p.n0 + k, 0));
  return ModelVector(Poly(std::move(c0v)), Poly(std::move(c1v)));
}

Mat jordan_block_matrix(int n) {
  if (n < 0) throw DomainError("negative block size");
  Mat m(n, n);
  for (int k = 0; k + 1 < n; ++k) m.at(k + 1, k) = GaussianRational(1);
  return m;
}

Mat model_operator(const ModelPair& p) {
  Mat m(p.dim(), p.dim());
  for (int k = 0; k + 1 < p.n0; ++k) m.at(k + 1, k) = GaussianRational(1);
  for (int k = 0; k + 1 < p.n1; ++k) m.at(p.n0 + k + 1, p.n0 + k) = GaussianRational(1);
  return m;
}

Mat poly_calculus(const Poly& u, const ModelPair& p) {
  Mat m(p.dim(), p.dim());
  for (int j = 0; j < p.n0; ++j) {
    Poly col = u.shifted(j).truncated(p.n0);
    for (int i = 0; i < p.n0; ++i) m.at(i, j) = col.at(i);
  }
  for (int j = 0; j < p.n1; ++j) {
    Poly col = u.shifted(j).truncated(p.n1);
    for (int i = 0; i < p.n1; ++i) m.at(p.n0 + i, p.n0 + j) = col.at(i);
  }
  return m;
}

CommutantElement CommutantElement::reduced(const ModelPair& p) const {
  return {a00.truncated(p.n0), a01low.truncated(p.n1), a10.truncated(p.n1), a11.truncated(p.n1)};
}

CommutantElement CommutantElement::normalized() const {
  const Poly* blocks[4] = {&a00, &a01low, &a10, &a11};
  for (const Poly* b : blocks) {
    for (int k = 0; k <= b->degree(); ++k) {
      if (!b->at(k).is_zero()) {
        GaussianRational inv = inverse(b->at(k));
        return {a00 * inv, a01low * inv, a10 * inv, a11 * inv};
      }
    }
  }
  return *this;
}

std::string CommutantElement::to_string() const {
  return "[a00=" + c0::to_string(a00) + ", a01low=" + c0::to_string(a01low) +
         ", a10=" + c0::to_string(a10) + ", a11=" + c0::to_string(a11) + "]";
}

CommutantElement identity_symbol(const ModelPair& p) {
  CommutantElement e;
  e.a00 = Poly::one();
  if (p.n1 > 0) e.a11 = Poly::one();
  return e;
}

std::vector<CommutantElement> commutant_basis(const ModelPair& p) {
  std::vector<CommutantElement> basis;
  basis.reserve(static_cast<size_t>(p.n0 + 3 * p.n1));
  for (int k = 0; k < p.n0; ++k) {
    CommutantElement e;
    e.a00 = Poly::monomial(k);
    basis.push_back(e);
  }
  for (int k = 0; k < p.n1; ++k) {
    CommutantElement e;
    e.a01low = Poly::monomial(k);
    basis.push_back(e);
  }
  for (int k = 0; k < p.n1; ++k) {
    CommutantElement e;
    e.a10 = Poly::monomial(k);
    basis.push_back(e);
  }
  for (int k = 0; k < p.n1; ++k) {
    CommutantElement e;
    e.a11 = Poly::monomial(k);
    basis.push_back(e);
  }
  return basis;
}

Mat psi(const CommutantElement& a, const ModelPair& p) {
  Mat m(p.dim(), p.dim());
  auto fill_column = [&](int j, const Poly& out0, const Poly& out1) {
    for (int i = 0; i < p.n0; ++i) m.at(i, j) = out0.at(i);
    for (int i = 0; i < p.n1; ++i) m.at(p.n0 + i, j) = out1.at(i);
  };
  for (int j = 0; j < p.n0; ++j) {
    // Input e_j, i.e. g = z^j, f = 0.
    fill_column(j, a.a00.shifted(j).truncated(p.n0), a.a10.shifted(j).truncated(p.n1));
  }
  for (int k = 0; k < p.n1; ++k) {
    // Input f_k, i.e. g = 0, f = z^k.
    fill_column(p.n0 + k, a.a01low.shifted(p.n0 - p.n1 + k).truncated(p.n0),
                a.a11.shifted(k).truncated(p.n1));
  }
  return m;
}

CommutantElement mul_symbols(const CommutantElement& a, const CommutantElement& b, const ModelPair& p) {
  int gap = p.n0 - p.n1;
  CommutantElement c;
  // Full symbol product with a01 = z^gap * a01low; the z^gap factors combine
  // so every entry again has the required shape.
  c.a00 = a.a00 * b.a00 + (a.a01low * b.a10).shifted(gap);
  c.a01low = a.a00 * b.a01low + a.a01low * b.a11;
  c.a10 = a.a10 * b.a00 + a.a11 * b.a10;
  c.a11 = (a.a10 * b.a01low).shifted(gap) + a.a11 * b.a11;
  return c.reduced(p);
}

Poly det_symbol(const CommutantElement& a, const ModelPair& p) {
  // With n1 == 0 the symbol is 1x1 and its determinant is a00 itself.
  if (p.n1 == 0) return a.a00.truncated(p.n0);
  return (a.a00 * a.a11 - (a.a01low * a.a10).shifted(p.n0 - p.n1)).truncated(p.n0);
}

Adjugate adjugate(const CommutantElement& a, const ModelPair& p) {
  CommutantElement prime;
  if (p.n1 == 0) {
    prime.a00 = Poly::one();  // adjugate of a 1x1 symbol
  } else {
    prime.a00 = a.a11;
    prime.a01low = -a.a01low;
    prime.a10 = -a.a10;
    prime.a11 = a.a00;
  }
  return {prime.reduced(p), det_symbol(a, p)};
}

bool is_quasiaffinity(const CommutantElement& a, const ModelPair& p) {
  return !det_symbol(a, p).at(0).is_zero();
}

}  // namespace c0
