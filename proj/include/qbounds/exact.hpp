#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbounds {

/// Arbitrary-precision integer. All bound decisions in this library are made
/// on exact values; no floating point appears anywhere on a decision path.
using BigInt = mpz_class;

/// C(a, b) with the vanishing convention: 0 whenever a < 0, b < 0 or b > a.
/// Krawtchouk evaluation relies on out-of-range terms dropping out, so this
/// is a total function rather than an error.
BigInt binomial(long a, long b);

/// Exact base^exp. power(x, 0) == 1 for every x, including 0.
BigInt power(const BigInt& base, unsigned long exp);

struct IsqrtResult {
  BigInt root;   // largest r with r^2 <= v
  bool perfect;  // r^2 == v
};

/// Floor integer square root. Throws std::domain_error for v < 0.
IsqrtResult isqrt_floor(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Exact fraction of BigInts, always in lowest terms with positive
/// denominator. Comparisons and equality are exact; there is no float
/// conversion on purpose.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}               // intentionally implicit
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // intentionally implicit
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Cross-multiplied exact comparison; denominators are always positive.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "p" when integral, "p/q" otherwise, lowest terms, '-' on the numerator.
  std::string str() const;

 private:
  void normalize();
  BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qbounds
