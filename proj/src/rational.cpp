#include "c0/rational.hpp"

#include <cctype>

#include "c0/errors.hpp"

namespace c0 {

namespace {

// Consumes a nonempty digit run from text[pos...]; returns the parsed value.
BigInt parse_digits(std::string_view text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits in rational literal '" + std::string(text) + "'");
  return BigInt(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  BigInt num = parse_digits(text, pos);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_digits(text, pos);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational literal '" + std::string(text) + "'");
  if (negative) num = -num;
  // Constructing from two integers canonicalizes; string construction would not.
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace c0
