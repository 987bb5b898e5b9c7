#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace c0 {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backend canonicalizes on construction from integers and on
// every arithmetic operation).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses the grammar  RATIONAL := "-"? DIGITS ("/" DIGITS)?  — nothing else
// (no '+', no whitespace, no empty numerator).  Throws ParseError.
Rational parse_rational(std::string_view text);

// Renders in the same grammar: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& r);

}  // namespace c0
