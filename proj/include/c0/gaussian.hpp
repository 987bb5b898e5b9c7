#pragma once

#include <string>
#include <string_view>

#include "c0/rational.hpp"

namespace c0 {

// Element of Q(i): exact real and imaginary rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long value) : re(value), im(0) {}  // NOLINT: implicit by design
  GaussianRational(int value) : re(value), im(0) {}   // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2 = re^2 + im^2, exact and nonnegative.
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Lexicographic order on (re, im); used only as a container key.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

GaussianRational inverse(const GaussianRational& z);

// Grammar:  GAUSSIAN := RATIONAL (("+"|"-") RATIONAL "i")?
// Examples: "2", "-1/2", "0+1i", "1/2-2/3i".  Throws ParseError.
GaussianRational parse_gaussian(std::string_view text);

// Canonical rendering: real part alone when im == 0, otherwise
// "<re>+<|im|>i" / "<re>-<|im|>i" with the sign carried by the separator.
std::string to_string(const GaussianRational& z);

}  // namespace c0
