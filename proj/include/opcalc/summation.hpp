#pragma once

#include "opcalc/operator_series.hpp"

#include <string>

namespace opcalc {

/// Particular solution of f(x+1) - f(x) = g(x), normalized so f(0) = 0.
struct DifferenceSolution {
  Polynomial particular;
  std::string normalization_note;
};

/// Solves f(x+1) - f(x) = g(x) for polynomial g by inverting e^z - 1 as
/// z * phi(z) with phi = (e^z - 1)/z: one antiderivative handles the singular
/// z factor, and the x-free unit-constant-term phi is inverted as a series.
inline DifferenceSolution solve_difference(const Polynomial& g) {
  static const std::string note =
      "f(0) = 0; the general solution adds any 1-periodic function, whose "
      "polynomial shadow is an additive constant";
  if (g.is_zero()) return {Polynomial{}, note};
  const unsigned order = static_cast<unsigned>(g.degree()) + 2;
  OperatorSeries phi_inverse = OperatorSeries::expm1_over_z(order).reciprocal();
  Polynomial f = phi_inverse.apply(antiderivative(g, 1));
  f -= Polynomial::constant(f.coeff(0));
  return {f, note};
}

/// f with f(x+1) - f(x) = x^m and f(0) = 0, so f(N) = sum_{k=1}^{N} (k-1)^m.
inline Polynomial faulhaber(unsigned m) {
  return solve_difference(Polynomial::monomial(1, m)).particular;
}

/// Direct integer summation sum_{k=1}^{n} (k-1)^m; the oracle the polynomial
/// route is checked against.
inline Rational brute_force_sum(unsigned m, unsigned long long n) {
  BigInt total(0);
  for (unsigned long long k = 1; k <= n; ++k)
    total += boost::multiprecision::pow(BigInt(k - 1), m);
  return Rational(std::move(total));
}

/// (k+1)-fold antiderivative with base point 0, computed through the
/// single-integral kernel form int_0^x (x-t)^k g(t)/k! dt: expand (x-t)^k
/// and integrate termwise. For monomial t^i the kernel contributes
/// x^{k+i+1} sum_{j=0}^{k} C(k,j) (-1)^j / (i+j+1).
inline Polynomial iterated_integral(const Polynomial& g, unsigned k) {
  if (g.is_zero()) return {};
  std::vector<Rational> v(g.coeffs().size() + k + 1);
  const Rational k_factorial_inv(BigInt(1), factorial(k));
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    const Rational gi = g.coeff(i);
    if (gi.is_zero()) continue;
    Rational weight;
    for (unsigned j = 0; j <= k; ++j) {
      Rational term(binomial(k, j), BigInt(i + j + 1));
      weight += (j % 2 == 0) ? term : -term;
    }
    v[i + k + 1] = gi * weight * k_factorial_inv;
  }
  return Polynomial(std::move(v));
}

}  // namespace opcalc
