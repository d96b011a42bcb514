#include "isr/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace isr {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (r.is_integer()) return r.num().str();
  return r.num().str() + "/" + r.den().str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: \"" + s + "\"");
  }
}

namespace {

// log2 of a positive BigInt, exact to double precision even when the value
// itself is far beyond double range: msb position plus the fractional
// contribution of the top bits.
double log2_positive(const BigInt& v) {
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 62) return std::log2(v.convert_to<double>());
  const BigInt top = v >> (bits - 62);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

}  // namespace

double log2_abs(const Rational& r) {
  if (r.is_zero()) return -std::numeric_limits<double>::infinity();
  BigInt n = r.num();
  if (n < 0) n = -n;
  return log2_positive(n) - log2_positive(r.den());
}

}  // namespace isr
