#pragma once

#include "opcalc/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

struct TruncationTooLow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotXFree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated operator series F(x,z) = sum_{n=0}^{N} F_n(x) z^n, where z
/// stands for d/dx. The coefficient list always holds exactly N+1 entries;
/// zero coefficients stay stored, so the truncation order is never silently
/// reduced. Series of different truncation orders never compare equal.
class OperatorSeries {
 public:
  explicit OperatorSeries(unsigned truncation_order)
      : coeffs_(truncation_order + 1) {}

  explicit OperatorSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("OperatorSeries: coefficient list must be nonempty");
  }

  unsigned truncation_order() const {
    return static_cast<unsigned>(coeffs_.size()) - 1;
  }

  const Polynomial& coeff(std::size_t n) const { return coeffs_.at(n); }
  void set_coeff(std::size_t n, Polynomial p) { coeffs_.at(n) = std::move(p); }

  /// Multiplication by 1: F_0 = 1, all higher coefficients zero.
  static OperatorSeries identity(unsigned order) {
    OperatorSeries s(order);
    s.coeffs_[0] = Polynomial::constant(1);
    return s;
  }

  /// The operator z itself.
  static OperatorSeries d_dx(unsigned order) {
    if (order < 1) throw std::invalid_argument("d_dx: order must be >= 1");
    OperatorSeries s(order);
    s.coeffs_[1] = Polynomial::constant(1);
    return s;
  }

  /// e^z: coefficients 1/n!. Applied to a polynomial it shifts x by 1.
  static OperatorSeries exp_z(unsigned order) {
    OperatorSeries s(order);
    for (unsigned n = 0; n <= order; ++n)
      s.coeffs_[n] = Polynomial::constant(Rational(BigInt(1), factorial(n)));
    return s;
  }

  /// (e^z - 1)/z: coefficients 1/(n+1)!. Its reciprocal carries the
  /// Bernoulli numbers B_n/n!.
  static OperatorSeries expm1_over_z(unsigned order) {
    OperatorSeries s(order);
    for (unsigned n = 0; n <= order; ++n)
      s.coeffs_[n] = Polynomial::constant(Rational(BigInt(1), factorial(n + 1)));
    return s;
  }

  /// x-free series from plain z-coefficients.
  static OperatorSeries from_constants(std::vector<Rational> constants) {
    if (constants.empty())
      throw std::invalid_argument("from_constants: coefficient list must be nonempty");
    OperatorSeries s(static_cast<unsigned>(constants.size()) - 1);
    for (std::size_t n = 0; n < constants.size(); ++n)
      s.coeffs_[n] = Polynomial::constant(std::move(constants[n]));
    return s;
  }

  /// Structural x-freeness: every coefficient is a constant polynomial.
  bool x_free() const {
    for (const Polynomial& p : coeffs_)
      if (p.degree() > 0) return false;
    return true;
  }

  /// Largest x-degree over all coefficients, -1 for the zero series.
  int max_coeff_degree() const {
    int d = -1;
    for (const Polynomial& p : coeffs_) d = std::max(d, p.degree());
    return d;
  }

  /// sum_{n=0}^{N} F_n(x) u^(n)(x). Exact for polynomial u whenever
  /// N >= deg(u); lower truncation would silently drop terms, so it throws.
  Polynomial apply(const Polynomial& u) const {
    if (u.degree() > static_cast<int>(truncation_order()))
      throw TruncationTooLow("apply: truncation order " +
                             std::to_string(truncation_order()) +
                             " below deg(u) = " + std::to_string(u.degree()));
    Polynomial result;
    Polynomial du = u;
    for (std::size_t n = 0; n < coeffs_.size() && !du.is_zero(); ++n) {
      result += coeffs_[n] * du;
      du = derivative(du, 1);
    }
    return result;
  }

  /// F_z^(k)/k!: coefficient n of the result is C(n+k,k) F_{n+k}(x), and the
  /// truncation order drops to N-k.
  OperatorSeries z_derivative_shifted(unsigned k) const {
    if (k > truncation_order())
      throw TruncationTooLow("z_derivative_shifted: k = " + std::to_string(k) +
                             " exceeds truncation order " +
                             std::to_string(truncation_order()));
    OperatorSeries out(truncation_order() - k);
    for (std::size_t n = 0; n < out.coeffs_.size(); ++n)
      out.coeffs_[n] = coeffs_[n + k] * Rational(binomial(static_cast<unsigned>(n) + k, k));
    return out;
  }

  /// F(x,z) applied to the product uv without forming uv first:
  /// sum_n v^(n) (F_z^(n)/n!) u. Equals apply(u*v) exactly when
  /// N >= deg(u) + deg(v).
  Polynomial apply_to_product(const Polynomial& u, const Polynomial& v) const {
    if (u.is_zero() || v.is_zero()) return {};
    if (u.degree() + v.degree() > static_cast<int>(truncation_order()))
      throw TruncationTooLow("apply_to_product: truncation order " +
                             std::to_string(truncation_order()) +
                             " below deg(u) + deg(v) = " +
                             std::to_string(u.degree() + v.degree()));
    Polynomial result;
    Polynomial dv = v;
    for (unsigned n = 0; !dv.is_zero(); ++n) {
      result += dv * z_derivative_shifted(n).apply(u);
      dv = derivative(dv, 1);
    }
    return result;
  }

  /// 1/F for x-free F with nonzero constant term:
  /// X_0 = 1/F_0, X_n = -(1/F_0) sum_{k=1}^{n} F_k X_{n-k}.
  OperatorSeries reciprocal() const {
    if (!x_free())
      throw NotXFree("reciprocal: series has x-dependent coefficients");
    Rational f0 = coeffs_[0].coeff(0);
    if (f0.is_zero())
      throw NotInvertible("reciprocal: constant term is zero");
    std::vector<Rational> x(coeffs_.size());
    x[0] = Rational(1) / f0;
    for (std::size_t n = 1; n < x.size(); ++n) {
      Rational acc;
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k].coeff(0) * x[n - k];
      x[n] = -acc / f0;
    }
    return from_constants(std::move(x));
  }

  /// Formal product of the z-series (coefficientwise polynomial products),
  /// truncated at the shared order.
  friend OperatorSeries cauchy_product(const OperatorSeries& a, const OperatorSeries& b) {
    if (a.truncation_order() != b.truncation_order())
      throw TruncationMismatch("cauchy_product: orders " +
                               std::to_string(a.truncation_order()) + " and " +
                               std::to_string(b.truncation_order()) + " differ");
    OperatorSeries out(a.truncation_order());
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j)
      for (std::size_t m = 0; m <= j; ++m)
        out.coeffs_[j] += a.coeffs_[m] * b.coeffs_[j - m];
    return out;
  }

  /// Operator composition X(x,z) F(x,z) = sum_n (1/n!) (d^n X/dz^n)(d^n F/dx^n),
  /// with every product truncated at the shared order N. Applying the result
  /// to u equals applying X after F whenever the degrees involved stay <= N.
  friend OperatorSeries bourlet_product(const OperatorSeries& x_op,
                                        const OperatorSeries& f_op) {
    if (x_op.truncation_order() != f_op.truncation_order())
      throw TruncationMismatch("bourlet_product: orders " +
                               std::to_string(x_op.truncation_order()) + " and " +
                               std::to_string(f_op.truncation_order()) + " differ");
    const unsigned order = x_op.truncation_order();
    OperatorSeries result(order);
    // dF[j] holds d^n F_j / dx^n for the current n.
    std::vector<Polynomial> df(f_op.coeffs_);
    for (unsigned n = 0; n <= order; ++n) {
      if (n > 0)
        for (Polynomial& p : df) p = derivative(p, 1);
      OperatorSeries xn = x_op.z_derivative_shifted(n);
      for (std::size_t m = 0; m + n <= order; ++m) {
        if (xn.coeffs_[m].is_zero()) continue;
        for (std::size_t j = 0; m + j <= order; ++j) {
          if (df[j].is_zero()) continue;
          result.coeffs_[m + j] += xn.coeffs_[m] * df[j];
        }
      }
    }
    return result;
  }

  friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const OperatorSeries& a, const OperatorSeries& b) {
    return !(a == b);
  }

 private:
  std::vector<Polynomial> coeffs_;
};

/// Terms ascending in n: "(F0) + (F1) z + (F2) z^2".
inline std::string to_string(const OperatorSeries& s) {
  std::string out;
  for (unsigned n = 0; n <= s.truncation_order(); ++n) {
    const Polynomial& p = s.coeff(n);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p) + ")";
    if (n == 1) out += " z";
    if (n > 1) out += " z^" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const OperatorSeries& s) {
  return os << to_string(s);
}

}  // namespace opcalc
