#pragma once

#include <gmpxx.h>

#include <string>

#include "geo/error.hpp"

namespace geo {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational, always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) == 1. All arithmetic is exact; there is no
/// rounding anywhere in the kernel.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: intentionally implicit
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw GeomError(ErrKind::DivisionByZero, "denominator is zero");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "-7" or "5/2". Whitespace is not accepted.
  static Rational parse(const std::string& text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(::abs(q_)); }

  /// "5/2", or "-7" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw GeomError(ErrKind::DivisionByZero, "division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}

  mpq_class q_;  // mpq arithmetic preserves canonical form
};

}  // namespace geo
