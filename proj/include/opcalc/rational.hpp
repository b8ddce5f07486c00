#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is stored as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }
  Rational(long long numerator, long long denominator)
      : num_(numerator), den_(denominator) {
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Canonical form makes componentwise comparison exact.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  /// "a/b", or just "a" for integers.
  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer exponent; a negative exponent inverts (throws on zero base).
inline Rational pow(const Rational& base, long long exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  Rational result(1);
  Rational b = base;
  auto e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

/// n!, memoized process-wide.
inline BigInt factorial(unsigned n) {
  static std::vector<BigInt> cache{BigInt(1)};
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
  return cache[n];
}

/// C(n, k); zero for k > n.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace opcalc
