#pragma once

#include "opcalc/summation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace opcalc {

struct OddExponentSurvives : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonTriangular : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleTooClose : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact coefficient pure + sum_j c_{2j} Z_{2j} / pi^{2j}, where Z_{2j} is
/// the formal symbol for sum_{n>=1} n^{-2j}. Keys are even and >= 2; zero
/// entries are never stored.
struct SymbolicCoefficient {
  Rational pure;
  std::map<int, Rational> zeta_terms;

  bool is_zero() const { return pure.is_zero() && zeta_terms.empty(); }
  bool is_pure() const { return zeta_terms.empty(); }

  void add_pure(const Rational& c) { pure += c; }

  void add_zeta(int two_j, const Rational& c) {
    if (two_j < 2 || two_j % 2 != 0)
      throw std::invalid_argument("SymbolicCoefficient: zeta index must be even and >= 2");
    if (c.is_zero()) return;
    auto [it, inserted] = zeta_terms.try_emplace(two_j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) zeta_terms.erase(it);
    }
  }

  friend bool operator==(const SymbolicCoefficient& a, const SymbolicCoefficient& b) {
    return a.pure == b.pure && a.zeta_terms == b.zeta_terms;
  }
  friend bool operator!=(const SymbolicCoefficient& a, const SymbolicCoefficient& b) {
    return !(a == b);
  }
};

inline std::string to_string(const SymbolicCoefficient& c) {
  if (c.is_zero()) return "0";
  std::string out;
  if (!c.pure.is_zero()) out = c.pure.str();
  for (const auto& [a, q] : c.zeta_terms) {
    if (!out.empty()) out += q.sign() < 0 ? " - " : " + ";
    else if (q.sign() < 0) out += "-";
    Rational m = abs(q);
    if (m != Rational(1)) out += m.str() + "*";
    out += "Z" + std::to_string(a) + "/pi^" + std::to_string(a);
  }
  return out;
}

/// Polynomial in x with SymbolicCoefficient entries; same canonical-form
/// rules as Polynomial (no trailing zero coefficients).
class SymbolicPolynomial {
 public:
  SymbolicPolynomial() = default;

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  SymbolicCoefficient coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : SymbolicCoefficient{};
  }

  void add_pure(std::size_t i, const Rational& c) {
    grow(i);
    coeffs_[i].add_pure(c);
    trim();
  }

  void add_zeta(std::size_t i, int two_j, const Rational& c) {
    grow(i);
    coeffs_[i].add_zeta(two_j, c);
    trim();
  }

  friend bool operator==(const SymbolicPolynomial& a, const SymbolicPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymbolicPolynomial& a, const SymbolicPolynomial& b) {
    return !(a == b);
  }

 private:
  void grow(std::size_t i) {
    if (coeffs_.size() <= i) coeffs_.resize(i + 1);
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<SymbolicCoefficient> coeffs_;
};

/// One monomial coeff * x^{x_power} * n^{-inv_power} * pi^{-inv_power};
/// powers of 2 from w = 2 n pi are folded into coeff.
struct KernelTerm {
  unsigned x_power;
  unsigned inv_power;
  Rational coeff;

  friend bool operator==(const KernelTerm& a, const KernelTerm& b) {
    return a.x_power == b.x_power && a.inv_power == b.inv_power && a.coeff == b.coeff;
  }
};

/// int_0^x cos(2 n pi (x-t)) t^m dt, split into a non-periodic polynomial
/// part and sin(2 n pi x)/cos(2 n pi x) parts. Every stored coefficient is
/// nonzero and every inv_power is >= 1.
struct KernelResult {
  std::vector<KernelTerm> polynomial_part;
  std::vector<KernelTerm> sin_part;
  std::vector<KernelTerm> cos_part;
};

/// Closed form by repeated integration by parts, n kept symbolic. With
/// w = 2 n pi:
///   I_0 = sin(w x) / w
///   I_1 = (1 - cos(w x)) / w^2
///   I_m = m x^{m-1} / w^2 - m(m-1)/w^2 * I_{m-2}      (m >= 2)
/// so each step scales the previous result by -m(m-1)/4 * (n pi)^{-2} and
/// adds the polynomial term m/4 * x^{m-1} (n pi)^{-2}.
inline KernelResult cosine_kernel_integral(unsigned m) {
  KernelResult r;
  unsigned base;
  if (m % 2 == 0) {
    r.sin_part.push_back({0, 1, Rational(1, 2)});
    base = 0;
  } else {
    r.polynomial_part.push_back({0, 2, Rational(1, 4)});
    r.cos_part.push_back({0, 2, Rational(-1, 4)});
    base = 1;
  }
  for (unsigned mm = base + 2; mm <= m; mm += 2) {
    const Rational scale = Rational(-static_cast<long long>(mm) *
                                    static_cast<long long>(mm - 1)) /
                           Rational(4);
    auto rescale = [&](std::vector<KernelTerm>& terms) {
      for (KernelTerm& t : terms) {
        t.coeff *= scale;
        t.inv_power += 2;
      }
    };
    rescale(r.polynomial_part);
    rescale(r.sin_part);
    rescale(r.cos_part);
    r.polynomial_part.push_back({mm - 1, 2, Rational(mm) / Rational(4)});
  }
  auto by_x_power = [](const KernelTerm& a, const KernelTerm& b) {
    return a.x_power != b.x_power ? a.x_power < b.x_power
                                  : a.inv_power < b.inv_power;
  };
  std::sort(r.polynomial_part.begin(), r.polynomial_part.end(), by_x_power);
  std::sort(r.sin_part.begin(), r.sin_part.end(), by_x_power);
  std::sort(r.cos_part.begin(), r.cos_part.end(), by_x_power);
  return r;
}

/// Numeric value of the closed form at concrete n and x.
inline double eval(const KernelResult& r, unsigned n, double x) {
  const double n_pi = static_cast<double>(n) * std::numbers::pi;
  auto part = [&](const std::vector<KernelTerm>& terms) {
    double s = 0.0;
    for (const KernelTerm& t : terms)
      s += t.coeff.to_double() * std::pow(x, t.x_power) *
           std::pow(n_pi, -static_cast<double>(t.inv_power));
    return s;
  };
  const double angle = 2.0 * n_pi * x;
  return part(r.polynomial_part) + part(r.sin_part) * std::sin(angle) +
         part(r.cos_part) * std::cos(angle);
}

/// Non-periodic part of the operator solution of f(x+1) - f(x) = x^m built
/// from the pole expansion of 1/(e^z - 1):
///   -x^m/2 + int_0^x t^m dt + 2 sum_{n>=1} cosine_kernel_integral(m),
/// where the n-sum turns each n^{-2j} pi^{-2j} monomial into Z_{2j}/pi^{2j}
/// and the sin/cos terms are dropped into the periodic part. A surviving odd
/// n-exponent would mean the paired resolvent terms failed to cancel.
inline SymbolicPolynomial particular_solution_spectral(unsigned m) {
  SymbolicPolynomial p;
  p.add_pure(m, Rational(-1, 2));
  p.add_pure(m + 1, Rational(BigInt(1), BigInt(m + 1)));
  const KernelResult kernel = cosine_kernel_integral(m);
  for (const KernelTerm& t : kernel.polynomial_part) {
    if (t.inv_power % 2 != 0)
      throw OddExponentSurvives(
          "particular_solution_spectral: n^-" + std::to_string(t.inv_power) +
          " term survives in the polynomial part at m = " + std::to_string(m));
    p.add_zeta(t.x_power, static_cast<int>(t.inv_power), Rational(2) * t.coeff);
  }
  return p;
}

/// zeta(k) = rational * pi^k.
struct ZetaValue {
  int k;
  Rational rational;

  friend bool operator==(const ZetaValue& a, const ZetaValue& b) {
    return a.k == b.k && a.rational == b.rational;
  }
};

/// "zeta(4) = 1/90 * pi^4"
inline std::string to_string(const ZetaValue& v) {
  return "zeta(" + std::to_string(v.k) + ") = " + v.rational.str() + " * pi^" +
         std::to_string(v.k);
}

/// Replaces every Z_{2j}/pi^{2j} with its solved rational value.
inline Polynomial substitute_zeta(const SymbolicPolynomial& p,
                                  const std::map<int, Rational>& zeta_over_pi) {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (std::size_t i = 0; i < v.size(); ++i) {
    SymbolicCoefficient c = p.coeff(i);
    Rational value = c.pure;
    for (const auto& [a, q] : c.zeta_terms) {
      auto it = zeta_over_pi.find(a);
      if (it == zeta_over_pi.end())
        throw std::invalid_argument("substitute_zeta: no value for Z" +
                                    std::to_string(a));
      value += q * it->second;
    }
    v[i] = value;
  }
  return Polynomial(std::move(v));
}

/// For m = 2, 4, ..., max_k: equate faulhaber(m) with the spectral particular
/// solution and compare coefficients of x^1..x^{m+1}. Each stage introduces
/// exactly the new unknown Z_m (in the x^1 coefficient); all other
/// coefficients must already agree, and after substitution the residual must
/// vanish identically, which is the executable form of absorbing constants
/// into the periodic part.
inline std::vector<ZetaValue> extract_zeta(int max_k) {
  if (max_k < 2 || max_k % 2 != 0)
    throw std::invalid_argument("extract_zeta: max_k must be an even integer >= 2");
  std::map<int, Rational> solved;
  for (int m = 2; m <= max_k; m += 2) {
    const Polynomial lhs = faulhaber(static_cast<unsigned>(m));
    const SymbolicPolynomial rhs = particular_solution_spectral(static_cast<unsigned>(m));
    for (int i = m + 1; i >= 1; --i) {
      const SymbolicCoefficient c = rhs.coeff(static_cast<std::size_t>(i));
      Rational residual = lhs.coeff(static_cast<std::size_t>(i)) - c.pure;
      std::vector<std::pair<int, Rational>> unknowns;
      for (const auto& [a, q] : c.zeta_terms) {
        auto it = solved.find(a);
        if (it != solved.end())
          residual -= q * it->second;
        else
          unknowns.emplace_back(a, q);
      }
      if (unknowns.empty()) {
        if (!residual.is_zero())
          throw InconsistentSystem("extract_zeta: coefficient of x^" +
                                   std::to_string(i) + " at m = " +
                                   std::to_string(m) + " leaves residual " +
                                   residual.str());
      } else if (unknowns.size() == 1 && unknowns[0].first == m) {
        solved[m] = residual / unknowns[0].second;
      } else {
        throw NonTriangular("extract_zeta: coefficient of x^" + std::to_string(i) +
                            " at m = " + std::to_string(m) +
                            " involves an undetermined symbol other than Z" +
                            std::to_string(m));
      }
    }
    // Residual-zero assertion: with the solved values substituted, the
    // spectral solution must reproduce faulhaber(m) exactly up to an
    // additive constant.
    const Polynomial diff = lhs - substitute_zeta(rhs, solved);
    if (diff - Polynomial::constant(diff.coeff(0)) != Polynomial{})
      throw InconsistentSystem("extract_zeta: nonzero residual after substitution at m = " +
                               std::to_string(m));
  }
  std::vector<ZetaValue> values;
  for (int k = 2; k <= max_k; k += 2) values.push_back({k, solved.at(k)});
  return values;
}

/// lhs/rhs/|error| of the pole expansion of 1/(e^z - 1) at a real point:
/// rhs = -1/2 + 1/z + sum_{n=1}^{N} 2z/(z^2 + 4 n^2 pi^2).
struct PfdCheck {
  double lhs;
  double rhs;
  double abs_error;
};

inline PfdCheck pfd_numeric_check(double z0, long long terms) {
  if (std::abs(z0) < 1e-6)
    throw PoleTooClose("pfd_numeric_check: |z0| < 1e-6 is too close to the pole at 0");
  if (terms < 1)
    throw std::invalid_argument("pfd_numeric_check: terms must be >= 1");
  const double lhs = 1.0 / std::expm1(z0);
  double sum = 0.0;
  for (long long n = terms; n >= 1; --n) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(n);
    sum += 2.0 * z0 / (z0 * z0 + w * w);
  }
  const double rhs = -0.5 + 1.0 / z0 + sum;
  return {lhs, rhs, std::abs(lhs - rhs)};
}

/// |z0| / (2 pi^2 N): bounds the truncation error of the n-sum above.
inline double pfd_tail_bound(double z0, long long terms) {
  return std::abs(z0) / (2.0 * std::numbers::pi * std::numbers::pi *
                         static_cast<double>(terms));
}

/// Cross-check of an extracted zeta value against the direct partial sum.
struct ZetaNumericCheck {
  double symbolic;
  double partial_sum;
  double rel_error;
};

inline ZetaNumericCheck zeta_numeric_check(const ZetaValue& v, long long terms) {
  if (terms < 1)
    throw std::invalid_argument("zeta_numeric_check: terms must be >= 1");
  const double symbolic =
      v.rational.to_double() * std::pow(std::numbers::pi, static_cast<double>(v.k));
  // Kahan summation, smallest terms first.
  double sum = 0.0;
  double compensation = 0.0;
  for (long long n = terms; n >= 1; --n) {
    const double term = std::pow(static_cast<double>(n), -static_cast<double>(v.k));
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  return {symbolic, sum, std::abs(symbolic - sum) / symbolic};
}

}  // namespace opcalc
