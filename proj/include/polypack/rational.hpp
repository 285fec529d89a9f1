#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace polypack {

// Exact rational arithmetic. All coordinate math in this library is exact;
// there are no epsilon comparisons anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_num(const Rational& r) { return numerator(r); }
inline BigInt rational_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

// Smallest integer >= r.
inline BigInt rational_ceil(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

inline long to_long(const BigInt& v) { return static_cast<long>(v); }

// Accepts "3", "-2", or "p/q" with integer p, q (q > 0 after normalization).
std::optional<Rational> parse_rational(const std::string& text);

// "p/q" when the denominator is not 1, plain integer text otherwise.
std::string rational_to_string(const Rational& r);

}  // namespace polypack
