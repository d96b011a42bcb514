#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isr {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
using BoostRat = boost::multiprecision::cpp_rational;
}

// Exact rational scalar: always in lowest terms, denominator > 0.
//
// Thin strong type over boost's cpp_rational. The wrapper exists because
// cpp_rational itself cannot be used as an Eigen scalar: Eigen probes
// convertibility of its expression types during operator overload
// resolution, which trips a SFINAE bug inside boost 1.7x's container
// detection. Keeping the constructor set closed avoids the probe.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int v) : v_(v) {}                // NOLINT: implicit by design
  Rational(long long v) : v_(v) {}          // NOLINT
  explicit Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den) : v_(0) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = den < 0 ? detail::BoostRat(BigInt(-num), BigInt(-den)) : detail::BoostRat(num, den);
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  double to_double() const { return v_.convert_to<double>(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(detail::BoostRat v) : v_(std::move(v)) {}
  detail::BoostRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned e) {
  Rational acc(1);
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

// Serialization: "p" for integers, "p/q" otherwise. Exact round trip.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// log2 of |r|, usable when num/den overflow double range.
double log2_abs(const Rational& r);

std::string to_string(const BigInt& v);

}  // namespace isr
