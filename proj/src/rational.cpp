#include "polypack/rational.hpp"

namespace polypack {

namespace {

bool parse_bigint(const std::string& text, BigInt* out) {
  if (text.empty()) return false;
  size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) return false;
  for (size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  *out = BigInt(text);
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    BigInt n;
    if (!parse_bigint(text, &n)) return std::nullopt;
    return Rational(n);
  }
  BigInt num, den;
  if (!parse_bigint(text.substr(0, slash), &num)) return std::nullopt;
  if (!parse_bigint(text.substr(slash + 1), &den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace polypack
