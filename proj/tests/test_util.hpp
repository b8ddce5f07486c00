#pragma once

#include "opcalc/operator_series.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace opcalc::test {

// Randomness comes straight from the engine so a fixed seed reproduces the
// same cases on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rational rational(long long max_abs_num = 9, long long max_den = 9) {
    return Rational(range(-max_abs_num, max_abs_num), range(1, max_den));
  }

  Polynomial polynomial(unsigned max_degree, unsigned zero_one_in = 4) {
    std::vector<Rational> v(below(max_degree + 1) + 1);
    for (Rational& c : v)
      if (below(zero_one_in) != 0) c = rational();
    return Polynomial(std::move(v));
  }

  OperatorSeries series(unsigned order, unsigned max_coeff_degree) {
    OperatorSeries s(order);
    for (unsigned n = 0; n <= order; ++n)
      if (below(4) != 0) s.set_coeff(n, polynomial(max_coeff_degree));
    return s;
  }

  OperatorSeries x_free_series(unsigned order) {
    std::vector<Rational> v(order + 1);
    for (Rational& c : v)
      if (below(4) != 0) c = rational();
    return OperatorSeries::from_constants(std::move(v));
  }

 private:
  std::mt19937_64 engine_;
};

// Adaptive Simpson quadrature; the independent numeric-integration oracle.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double eps = 1e-12, int depth = 40) {
  auto simpson = [&f](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
  };
  std::function<double(double, double, double, double, int)> recurse =
      [&](double lo, double hi, double whole, double tol, int levels) {
        const double mid = 0.5 * (lo + hi);
        const double left = simpson(lo, mid);
        const double right = simpson(mid, hi);
        const double delta = left + right - whole;
        if (levels <= 0 || std::abs(delta) < 15.0 * tol)
          return left + right + delta / 15.0;
        return recurse(lo, mid, left, tol / 2.0, levels - 1) +
               recurse(mid, hi, right, tol / 2.0, levels - 1);
      };
  return recurse(a, b, simpson(a, b), eps, depth);
}

}  // namespace opcalc::test
