#include "opcalc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

namespace {

int emit(const opcalc::cli::OutputEnvelope& env, const std::string& format) {
  if (format == "json")
    std::cout << opcalc::cli::render_json(env);
  else
    std::cout << opcalc::cli::render_text(env);
  return env.all_passed() ? 0 : 3;
}

void print_parse_error(const std::string& text, const opcalc::ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  "
            << std::string(std::min(e.position, text.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact operator calculus: solves f(x+1) - f(x) = g(x) for polynomial g "
      "and derives even zeta values as exact rationals times powers of pi"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}));
  unsigned max_power = 0;
  CLI::Option* max_power_opt = app.add_option(
      "--max-power", max_power,
      "safety cap (default 32 for faulhaber powers, 16 for zeta --max-k)");

  auto* cmd_faulhaber = app.add_subcommand(
      "faulhaber", "closed form of sum_{k=1}^{x} (k-1)^m, checked at x = 1..10");
  unsigned power = 0;
  cmd_faulhaber->add_option("power", power, "exponent m")->required();

  auto* cmd_solve = app.add_subcommand(
      "solve", "particular solution of f(x+1) - f(x) = g(x) with f(0) = 0");
  std::string g_text;
  cmd_solve
      ->add_option("g", g_text,
                   "right-hand side, e.g. \"x^2\" or \"1/3*x^3 - 1/2*x\"")
      ->required();

  auto* cmd_zeta = app.add_subcommand(
      "zeta", "exact zeta(2), zeta(4), ... as rationals times powers of pi");
  int max_k = 2;
  long long verify_terms = 1000000;
  cmd_zeta->add_option("--max-k", max_k, "largest even k to extract")->required();
  cmd_zeta->add_option("--verify-terms", verify_terms,
                       "partial-sum length for the numeric cross-check");

  auto* cmd_pfd = app.add_subcommand(
      "pfd-check", "numeric check of the pole expansion of 1/(e^z - 1)");
  double z0 = 1.0;
  long long terms = 1000;
  cmd_pfd->add_option("--z0", z0, "real evaluation point, 0 < |z0| < 2*pi")
      ->required();
  cmd_pfd->add_option("--terms", terms, "number of pole pairs to sum");

  auto* cmd_bourlet = app.add_subcommand(
      "bourlet-check",
      "composition identity for the operator product on random pairs");
  std::uint64_t seed = 42;
  unsigned cases = 200;
  cmd_bourlet->add_option("--seed", seed, "RNG seed");
  cmd_bourlet->add_option("--cases", cases, "number of random pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace opcalc;
  try {
    if (*cmd_faulhaber) {
      const unsigned cap = max_power_opt->count() ? max_power : 32;
      if (power > cap) {
        std::cerr << "error: power " << power << " exceeds the cap " << cap
                  << " (adjust with --max-power)\n";
        return 2;
      }
      return emit(cli::run_faulhaber(power), format);
    }
    if (*cmd_solve) {
      try {
        return emit(cli::run_solve(g_text), format);
      } catch (const ParseError& e) {
        print_parse_error(g_text, e);
        return 2;
      }
    }
    if (*cmd_zeta) {
      const int cap = max_power_opt->count() ? static_cast<int>(max_power) : 16;
      if (max_k < 2 || max_k % 2 != 0) {
        std::cerr << "error: --max-k must be an even integer >= 2\n";
        return 2;
      }
      if (max_k > cap) {
        std::cerr << "error: --max-k " << max_k << " exceeds the cap " << cap
                  << " (adjust with --max-power)\n";
        return 2;
      }
      if (verify_terms < 1) {
        std::cerr << "error: --verify-terms must be >= 1\n";
        return 2;
      }
      return emit(cli::run_zeta(max_k, verify_terms), format);
    }
    if (*cmd_pfd) {
      if (terms < 1) {
        std::cerr << "error: --terms must be >= 1\n";
        return 2;
      }
      if (!(std::abs(z0) < 2.0 * std::numbers::pi)) {
        std::cerr << "error: require |z0| < 2*pi\n";
        return 2;
      }
      try {
        return emit(cli::run_pfd_check(z0, terms), format);
      } catch (const PoleTooClose& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    if (*cmd_bourlet) {
      if (cases < 1) {
        std::cerr << "error: --cases must be >= 1\n";
        return 2;
      }
      return emit(cli::run_bourlet_check(seed, cases), format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
