#pragma once

#include "opcalc/rational.hpp"

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opcalc {

/// Dense univariate polynomial over Rational, coefficients ascending in the
/// exponent. Canonical form never stores trailing zeros; the zero polynomial
/// stores nothing and reports degree() == -1 (the minus-infinity marker).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
  }

  static Polynomial monomial(Rational c, unsigned power) {
    std::vector<Rational> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend Polynomial operator-(const Polynomial& p) {
    std::vector<Rational> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -p.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeffs_[i] * c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// order-th derivative; the zero polynomial when order exceeds the degree.
inline Polynomial derivative(const Polynomial& p, unsigned order = 1) {
  if (order == 0) return p;
  if (p.degree() < static_cast<int>(order)) return {};
  std::vector<Rational> v(p.coeffs().size() - order);
  for (std::size_t i = 0; i < v.size(); ++i) {
    // (i+order)! / i! falling factorial
    v[i] = p.coeff(i + order) * Rational(factorial(i + order) / factorial(i));
  }
  return Polynomial(std::move(v));
}

/// Repeated antiderivative with every integration constant fixed to 0, so the
/// base point is x = 0 and the result vanishes there for order >= 1.
inline Polynomial antiderivative(const Polynomial& p, unsigned order = 1) {
  if (order == 0 || p.is_zero()) return p;
  std::vector<Rational> v(p.coeffs().size() + order);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    v[i + order] = p.coeff(i) * Rational(factorial(i), factorial(i + order));
  }
  return Polynomial(std::move(v));
}

/// Exact evaluation by Horner's scheme.
inline Rational eval(const Polynomial& p, const Rational& x0) {
  Rational acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x0 + p.coeff(i);
  return acc;
}

/// q with q(x) = p(x+a), computed as the finite Taylor sum
/// sum_{n=0}^{deg p} p^(n)(x) a^n / n!.
inline Polynomial shift(const Polynomial& p, const Rational& a) {
  Polynomial result;
  Polynomial dp = p;
  Rational a_pow(1);
  for (unsigned n = 0; !dp.is_zero(); ++n) {
    result += dp * (a_pow / Rational(factorial(n)));
    dp = derivative(dp, 1);
    a_pow *= a;
  }
  return result;
}

/// Descending-power rendering, e.g. "1/3*x^3 - 1/2*x^2 + 1/6*x".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rational m = abs(c);
    if (i == 0) {
      out += m.str();
    } else {
      if (m != Rational(1)) out += m.str() + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_string(p);
}

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position(position) {}
  std::size_t position;
};

/// Parses the rendering format back: terms joined by +/-, coefficients as
/// integers or "a/b", variable x with caret powers, whitespace insensitive.
/// The '*' between coefficient and x is optional.
inline Polynomial parse_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto at_digit = [&] {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  };
  auto parse_uint = [&]() -> BigInt {
    std::size_t start = pos;
    while (at_digit()) ++pos;
    if (pos == start) throw ParseError("expected digits", start);
    return BigInt(std::string(text.substr(start, pos - start)));
  };

  Polynomial result;
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  int sign = 1;
  if (text[pos] == '+' || text[pos] == '-') {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (true) {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (at_digit()) {
      BigInt num = parse_uint();
      BigInt den(1);
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t den_pos = pos;
        if (!at_digit()) throw ParseError("expected denominator after '/'", pos);
        den = parse_uint();
        if (den.is_zero()) throw ParseError("zero denominator", den_pos);
      }
      coeff = Rational(std::move(num), std::move(den));
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos == text.size() || text[pos] != 'x')
          throw ParseError("expected 'x' after '*'", pos);
      }
    }
    unsigned power = 0;
    bool have_var = false;
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      have_var = true;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::size_t exp_pos = pos;
        if (!at_digit()) throw ParseError("expected exponent after '^'", pos);
        BigInt e = parse_uint();
        if (e > 4096) throw ParseError("exponent too large", exp_pos);
        power = e.convert_to<unsigned>();
      }
    }
    if (!have_coeff && !have_var)
      throw ParseError("expected a coefficient or 'x'", pos);
    result += Polynomial::monomial(Rational(sign) * coeff, power);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == '+') {
      sign = 1;
    } else if (text[pos] == '-') {
      sign = -1;
    } else {
      throw ParseError("expected '+', '-', or end of input", pos);
    }
    ++pos;
  }
  return result;
}

}  // namespace opcalc
