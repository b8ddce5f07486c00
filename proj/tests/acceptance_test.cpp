// Acceptance suite: each test exercises one shipping criterion end to end and
// prints a single PASS/FAIL line with the measured numbers.

#include "opcalc/cli.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace opcalc {
namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << id << (ok ? " PASS " : " FAIL ") << detail << std::endl;
  EXPECT_TRUE(ok) << id << ": " << detail;
}

TEST(Acceptance, AC1_BaselValueExact) {
  Stopwatch watch;
  const cli::OutputEnvelope env = cli::run_zeta(2, 1000);
  const std::vector<ZetaValue> values = extract_zeta(2);
  const bool exact = values.size() == 1 && values[0].k == 2 &&
                     values[0].rational == Rational(1, 6) &&
                     env.result.at("rendered")[0] == "zeta(2) = 1/6 * pi^2";
  const double elapsed = watch.seconds();
  report("AC-1", exact && elapsed < 1.0,
         "zeta --max-k 2 gives zeta(2) = 1/6 * pi^2 exactly (rational equality), " +
             std::to_string(elapsed) + " s (< 1 s)");
}

TEST(Acceptance, AC2_HigherZetaValuesExact) {
  Stopwatch watch;
  const cli::OutputEnvelope env = cli::run_zeta(8, 1000);
  const std::vector<ZetaValue> values = extract_zeta(8);
  const bool exact = values.size() == 4 &&
                     values[1] == ZetaValue{4, Rational(1, 90)} &&
                     values[2] == ZetaValue{6, Rational(1, 945)} &&
                     values[3] == ZetaValue{8, Rational(1, 9450)} &&
                     env.result.at("rendered")[3] == "zeta(8) = 1/9450 * pi^8";
  const double elapsed = watch.seconds();
  report("AC-2", exact && elapsed < 5.0,
         "zeta --max-k 8 gives 1/90*pi^4, 1/945*pi^6, 1/9450*pi^8 exactly, " +
             std::to_string(elapsed) + " s (< 5 s)");
}

TEST(Acceptance, AC3_FaulhaberOracleSuite) {
  Stopwatch watch;
  unsigned long long checked = 0;
  bool all_equal = true;
  for (unsigned m = 0; m <= 8 && all_equal; ++m) {
    const Polynomial f = faulhaber(m);
    for (unsigned long long n = 1; n <= 100; ++n) {
      ++checked;
      if (eval(f, Rational(static_cast<long long>(n))) != brute_force_sum(m, n)) {
        all_equal = false;
        break;
      }
    }
  }
  const double elapsed = watch.seconds();
  report("AC-3", all_equal && elapsed < 5.0,
         std::to_string(checked) +
             " exact matches of faulhaber(m <= 8) at N <= 100 against direct sums, " +
             std::to_string(elapsed) + " s (< 5 s)");
}

TEST(Acceptance, AC4_BourletCompositionProperty) {
  Stopwatch watch;
  const cli::OutputEnvelope env = cli::run_bourlet_check(42, 200);
  const unsigned passed = env.result.at("passed").get<unsigned>();
  const double elapsed = watch.seconds();
  report("AC-4", passed == 200 && env.all_passed() && elapsed < 10.0,
         std::to_string(passed) +
             "/200 seeded operator pairs (x-degree <= 3, z-order 6): "
             "product-then-apply equals apply-then-apply exactly, " +
             std::to_string(elapsed) + " s (< 10 s)");
}

TEST(Acceptance, AC5_BernoulliReciprocal) {
  const OperatorSeries inverse = OperatorSeries::expm1_over_z(20).reciprocal();
  std::vector<Rational> b(21);
  for (unsigned n = 0; n <= 20; ++n)
    b[n] = inverse.coeff(n).coeff(0) * Rational(factorial(n));
  bool ok = b[0] == Rational(1) && b[1] == Rational(-1, 2);
  for (unsigned n = 2; n <= 20 && ok; ++n) {
    Rational acc;
    for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n, k)) * b[k];
    ok = acc.is_zero();
  }
  report("AC-5", ok,
         "reciprocal of sum z^n/(n+1)! reproduces B_n/n! for n <= 20; "
         "independent recurrence sum_{k<n} C(n,k) B_k = 0 holds exactly");
}

TEST(Acceptance, AC6_PartialFractionNumericCheck) {
  Stopwatch watch;
  const double e1000 = pfd_numeric_check(1.0, 1000).abs_error;
  const double e100 = pfd_numeric_check(1.0, 100).abs_error;
  const double ratio = e100 / e1000;
  const double elapsed = watch.seconds();
  std::ostringstream detail;
  detail << "abs_error(N=1000) = " << e1000 << " <= 5e-4; error(N=100)/error(N=1000) = "
         << ratio << " in [8,12]; " << elapsed << " s (< 1 s)";
  report("AC-6", e1000 <= 5e-4 && ratio >= 8.0 && ratio <= 12.0 && elapsed < 1.0,
         detail.str());
}

TEST(Acceptance, AC7_NumericZetaCrossCheck) {
  Stopwatch watch;
  bool ok = true;
  double worst = 0.0;
  for (const ZetaValue& v : extract_zeta(8)) {
    const ZetaNumericCheck c = zeta_numeric_check(v, 1000000);
    worst = std::max(worst, c.rel_error);
    ok = ok && c.rel_error < 1e-5;
  }
  const double elapsed = watch.seconds();
  std::ostringstream detail;
  detail << "zeta(2..8) vs 10^6-term partial sums, worst rel_error = " << worst
         << " < 1e-5; " << elapsed << " s (< 2 s)";
  report("AC-7", ok && elapsed < 2.0, detail.str());
}

TEST(Acceptance, AC8_ResidualZeroAssertion) {
  std::map<int, Rational> solved;
  for (const ZetaValue& v : extract_zeta(8)) solved[v.k] = v.rational;
  bool ok = true;
  for (unsigned m = 2; m <= 8 && ok; m += 2) {
    const Polynomial reconstructed =
        substitute_zeta(particular_solution_spectral(m), solved);
    const Polynomial residual = faulhaber(m) - reconstructed;
    ok = (residual - Polynomial::constant(residual.coeff(0))).is_zero();
  }
  report("AC-8", ok,
         "spectral particular solution with solved zeta rationals reproduces "
         "faulhaber(m) up to an additive constant for every even m <= 8, "
         "residual identically zero");
}

}  // namespace
}  // namespace opcalc
