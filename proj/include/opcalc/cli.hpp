#pragma once

#include "opcalc/zeta.hpp"

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace opcalc::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

/// One command invocation's worth of output: echoed inputs, the payload, and
/// the list of verification checks run alongside it. The checks list exists
/// (possibly empty) on every run; the process exit code is 0 iff all passed.
struct OutputEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> summary;  // human-readable lines, text mode only

  bool all_passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline Json to_json(const OutputEnvelope& env) {
  Json checks = Json::array();
  for (const Check& c : env.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"command", env.command},
              {"inputs", env.inputs},
              {"result", env.result},
              {"checks", checks}};
}

inline std::string render_json(const OutputEnvelope& env) {
  return to_json(env).dump(2) + "\n";
}

inline std::string render_text(const OutputEnvelope& env) {
  std::string out;
  for (const std::string& line : env.summary) out += line + "\n";
  std::size_t passed = 0;
  for (const Check& c : env.checks) {
    out += (c.passed ? "[ok] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
    if (c.passed) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(env.checks.size()) +
         " checks passed\n";
  return out;
}

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// faulhaber <power>: the closed form of sum_{k=1}^{x} (k-1)^power, verified
/// against direct integer summation at x = 1..10.
inline OutputEnvelope run_faulhaber(unsigned power) {
  OutputEnvelope env;
  env.command = "faulhaber";
  env.inputs = {{"power", power}};
  const Polynomial f = faulhaber(power);
  const std::string rendered = to_string(f);
  env.result = {{"polynomial", rendered}};
  env.summary = {"f(x) = " + rendered};
  for (unsigned n = 1; n <= 10; ++n) {
    const Rational lhs = eval(f, Rational(n));
    const Rational rhs = brute_force_sum(power, n);
    env.checks.push_back({"brute-force N=" + std::to_string(n), lhs == rhs,
                          "f(" + std::to_string(n) + ") = " + lhs.str() +
                              ", direct sum = " + rhs.str()});
  }
  return env;
}

/// solve <g>: particular solution of f(x+1) - f(x) = g(x) with f(0) = 0.
inline OutputEnvelope run_solve(const std::string& g_text) {
  OutputEnvelope env;
  env.command = "solve";
  env.inputs = {{"g", g_text}};
  const Polynomial g = parse_polynomial(g_text);
  const DifferenceSolution sol = solve_difference(g);
  const std::string rendered = to_string(sol.particular);
  env.result = {{"g", to_string(g)},
                {"particular", rendered},
                {"normalization_note", sol.normalization_note}};
  env.summary = {"g(x) = " + to_string(g), "f(x) = " + rendered,
                 "note: " + sol.normalization_note};
  const Polynomial difference = shift(sol.particular, 1) - sol.particular;
  env.checks.push_back({"difference-identity", difference == g,
                        difference == g
                            ? "f(x+1) - f(x) = g(x) exactly"
                            : "f(x+1) - f(x) = " + to_string(difference) +
                                  " differs from g(x)"});
  const Rational at_zero = eval(sol.particular, Rational(0));
  env.checks.push_back({"normalization", at_zero.is_zero(),
                        "f(0) = " + at_zero.str()});
  return env;
}

/// zeta --max-k K: exact zeta(2), ..., zeta(K) as rational multiples of
/// powers of pi, each cross-checked against a direct partial sum. The check
/// tolerance is the analytic tail bound T^{1-k}/(k-1) (relative), plus
/// 1e-9 of floating-point slack.
inline OutputEnvelope run_zeta(int max_k, long long verify_terms) {
  OutputEnvelope env;
  env.command = "zeta";
  env.inputs = {{"max_k", max_k}, {"verify_terms", verify_terms}};
  const std::vector<ZetaValue> values = extract_zeta(max_k);
  Json machine = Json::array();
  Json rendered = Json::array();
  for (const ZetaValue& v : values) {
    machine.push_back({{"k", v.k},
                       {"numerator", v.rational.numerator().str()},
                       {"denominator", v.rational.denominator().str()}});
    rendered.push_back(to_string(v));
    env.summary.push_back(to_string(v));
  }
  env.result = {{"values", machine}, {"rendered", rendered}};
  for (const ZetaValue& v : values) {
    const ZetaNumericCheck c = zeta_numeric_check(v, verify_terms);
    const double tail_rel = std::pow(static_cast<double>(verify_terms),
                                     1.0 - static_cast<double>(v.k)) /
                            (static_cast<double>(v.k - 1) * c.symbolic);
    const double tol = tail_rel + 1e-9;
    env.checks.push_back(
        {"numeric zeta(" + std::to_string(v.k) + ")", c.rel_error <= tol,
         "partial_sum(" + std::to_string(verify_terms) + " terms) = " +
             fmt_double(c.partial_sum) + ", symbolic = " + fmt_double(c.symbolic) +
             ", rel_error = " + fmt_double(c.rel_error) + " <= tol " +
             fmt_double(tol)});
  }
  return env;
}

/// pfd-check --z0 --terms: numeric comparison of 1/(e^z - 1) with its
/// truncated pole expansion, against the analytic tail bound.
inline OutputEnvelope run_pfd_check(double z0, long long terms) {
  OutputEnvelope env;
  env.command = "pfd-check";
  env.inputs = {{"z0", z0}, {"terms", terms}};
  const PfdCheck c = pfd_numeric_check(z0, terms);
  const double bound = pfd_tail_bound(z0, terms);
  env.result = {{"lhs", c.lhs},
                {"rhs", c.rhs},
                {"abs_error", c.abs_error},
                {"tail_bound", bound}};
  env.summary = {
      "lhs = 1/(exp(z0) - 1) = " + fmt_double(c.lhs),
      "rhs = -1/2 + 1/z0 + sum_{n<=" + std::to_string(terms) +
          "} 2*z0/(z0^2 + 4*n^2*pi^2) = " + fmt_double(c.rhs),
      "abs_error = " + fmt_double(c.abs_error),
      "tail_bound = |z0|/(2*pi^2*N) = " + fmt_double(bound)};
  env.checks.push_back({"tail-bound", c.abs_error <= bound,
                        "abs_error = " + fmt_double(c.abs_error) +
                            " <= tail bound " + fmt_double(bound)});
  return env;
}

/// bourlet-check --seed --cases: composition identity on seeded-random
/// operator pairs (truncation order 6, coefficient degree <= 3) and test
/// polynomials of degree <= 3. Deterministic for a fixed seed.
inline OutputEnvelope run_bourlet_check(std::uint64_t seed, unsigned cases) {
  OutputEnvelope env;
  env.command = "bourlet-check";
  env.inputs = {{"seed", seed}, {"cases", cases}};
  env.summary = {"seed = " + std::to_string(seed) +
                 ", cases = " + std::to_string(cases)};

  std::mt19937_64 rng(seed);
  // Engine output only; std::uniform_int_distribution is not guaranteed to
  // produce the same stream on every platform.
  auto below = [&rng](std::uint64_t n) { return rng() % n; };
  auto random_rational = [&]() {
    const long long num = static_cast<long long>(below(19)) - 9;
    const long long den = static_cast<long long>(below(9)) + 1;
    return Rational(num, den);
  };
  auto random_polynomial = [&](unsigned max_degree) {
    std::vector<Rational> v(below(max_degree + 1) + 1);
    for (Rational& c : v)
      if (below(4) != 0) c = random_rational();
    return Polynomial(std::move(v));
  };
  auto random_series = [&](unsigned order, unsigned max_degree) {
    OperatorSeries s(order);
    for (unsigned n = 0; n <= order; ++n)
      if (below(4) != 0) s.set_coeff(n, random_polynomial(max_degree));
    return s;
  };

  constexpr unsigned kOrder = 6;
  constexpr unsigned kCoeffDegree = 3;
  constexpr unsigned kTestDegree = 3;
  unsigned passed = 0;
  std::string first_failure;
  for (unsigned i = 0; i < cases; ++i) {
    const OperatorSeries x_op = random_series(kOrder, kCoeffDegree);
    const OperatorSeries f_op = random_series(kOrder, kCoeffDegree);
    const Polynomial u = random_polynomial(kTestDegree);
    const Polynomial composed = bourlet_product(x_op, f_op).apply(u);
    const Polynomial sequential = x_op.apply(f_op.apply(u));
    if (composed == sequential) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = "case " + std::to_string(i) + ": X = " + to_string(x_op) +
                      ", F = " + to_string(f_op) + ", u = " + to_string(u);
    }
  }
  env.result = {{"cases", cases}, {"passed", passed}};
  std::string detail = std::to_string(passed) + "/" + std::to_string(cases) +
                       " composition identities exact";
  if (!first_failure.empty()) detail += "; first failure: " + first_failure;
  env.checks.push_back({"composition", passed == cases, detail});
  return env;
}

}  // namespace opcalc::cli
