#include "c0/gaussian.hpp"

#include "c0/errors.hpp"

namespace c0 {

GaussianRational inverse(const GaussianRational& z) {
  if (z.is_zero()) throw DomainError("division by zero Gaussian rational");
  Rational n = z.norm();
  return {z.re / n, -z.im / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= inverse(o);
}

GaussianRational parse_gaussian(std::string_view text) {
  // Split at the first '+' or '-' that is not the leading sign of the real
  // part; everything after it (up to a trailing 'i') is the imaginary part.
  if (text.empty()) throw ParseError("empty Gaussian rational literal");
  size_t split = std::string_view::npos;
  for (size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
      // A sign directly after '/' would be ungrammatical anyway; the first
      // sign past position 0 separates the parts.
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {parse_rational(text), Rational(0)};
  }
  if (text.back() != 'i') {
    throw ParseError("imaginary part must end in 'i' in '" + std::string(text) + "'");
  }
  Rational re = parse_rational(text.substr(0, split));
  Rational im = parse_rational(text.substr(split + 1, text.size() - split - 2));
  if (text[split] == '-') im = -im;
  return {re, im};
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.im > 0) return to_string(z.re) + "+" + to_string(z.im) + "i";
  return to_string(z.re) + "-" + to_string(Rational(-z.im)) + "i";
}

}  // namespace c0
