#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pbasis/errors.hpp"

namespace pbasis {

// Arbitrary-precision integer and rational scalars. Rationals stay in
// canonical form through every operation: denominator > 0 and
// gcd(|num|, den) = 1. The whole core computes over these; there is no
// floating-point path outside the search demo.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical rational num/den. Throws InvalidScalar when den = 0.
inline Rational rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw InvalidScalar("rat: zero denominator");
  }
  // The two-argument constructor rejects negative denominators; the
  // division route normalizes sign and gcd in one step.
  return Rational(num) / Rational(den);
}

inline Rational rat(long long num, long long den) { return rat(Int(num), Int(den)); }

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/" + denominator(q).str();
  }
  return s;
}

namespace detail {

inline bool is_integer_token(std::string_view tok) {
  std::size_t i = 0;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p/q" or an integer literal. Throws InvalidScalar on malformed
/// input or zero denominator.
inline Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_token(text)) {
      throw InvalidScalar("parse_rational: malformed integer '" + std::string(text) + "'");
    }
    return Rational(Int(std::string(text)));
  }
  const std::string_view num_tok = text.substr(0, slash);
  const std::string_view den_tok = text.substr(slash + 1);
  if (!detail::is_integer_token(num_tok) || !detail::is_integer_token(den_tok)) {
    throw InvalidScalar("parse_rational: malformed rational '" + std::string(text) + "'");
  }
  return rat(Int(std::string(num_tok)), Int(std::string(den_tok)));
}

}  // namespace pbasis
