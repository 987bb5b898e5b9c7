#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "c0/gaussian.hpp"

namespace c0 {

// Dense polynomial in z over the Gaussian rationals.  Coefficients are stored
// ascending by exponent with no trailing zeros, so the zero polynomial is the
// empty vector and degree() of zero is -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return monomial(0); }
  static Poly monomial(int exponent, GaussianRational scale = GaussianRational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of z^k, zero outside the stored range.
  const GaussianRational& at(int k) const;

  const std::vector<GaussianRational>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const GaussianRational& s) const;
  Poly operator-() const { return *this * GaussianRational(-1); }

  // Keeps only the coefficients of z^0 ... z^{n-1}.
  Poly truncated(int n) const;

  // Multiplies by z^k (k >= 0).
  Poly shifted(int k) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

// z-adic valuation capped at n: the least exponent with nonzero coefficient,
// or n when none exists below n (in particular, the zero polynomial gives n).
// Requires n >= 0.
int valuation(const Poly& f, int n);

std::string to_string(const Poly& f);

}  // namespace c0
