// nozcalc: evaluate decimal expressions at a chosen precision.
//
//   nozcalc --precision 100 --eval "exp(1)"
//   nozcalc --eval "exp(1)" --fixed-terms 70
//   nozcalc --repl
//   nozcalc --demo-cancellation
//
// Exit codes: 0 success, 1 evaluation error, 2 usage or syntax error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "noz/calc/evaluate.hpp"
#include "noz/calc/session.hpp"
#include "noz/context.hpp"
#include "noz/functions.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_eval = 1;
constexpr int exit_usage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbitrary-precision decimal expression evaluator", "nozcalc"};

  std::uint64_t precision = 100;
  std::string mode_name = "half-even";
  std::string expression;
  bool repl = false;
  bool demo = false;
  std::optional<std::uint64_t> fixed_terms;
  std::optional<std::uint64_t> guard_digits;
  std::uint64_t max_terms = 10'000;

  app.add_option("-p,--precision", precision, "Significant decimal digits (1..2000000000)")->capture_default_str();
  app.add_option("-m,--mode", mode_name, "Rounding: half-even, half-up, toward-zero, up, down")->capture_default_str();
  auto* eval_opt = app.add_option("-e,--eval", expression, "Evaluate one expression and print the result");
  auto* repl_opt = app.add_flag("--repl", repl, "Read expressions and :directives from stdin");
  auto* demo_opt = app.add_flag("--demo-cancellation", demo, "Show cancellation at 4 vs 50 digits");
  app.add_option("--fixed-terms", fixed_terms, "Sum exactly this many series terms");
  app.add_option("--guard-digits", guard_digits, "Extra working digits for series (default max(10, log10(max-terms)))");
  app.add_option("--max-terms", max_terms, "Cap on series terms")->capture_default_str();
  eval_opt->excludes(repl_opt)->excludes(demo_opt);
  repl_opt->excludes(demo_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (demo) return noz::calc::demo_cancellation(std::cout) == 0 ? exit_ok : exit_eval;

  const auto mode = noz::rounding_mode_from_string(mode_name);
  if (!mode) {
    std::cerr << "error: unknown rounding mode '" << mode_name << "'\n";
    return exit_usage;
  }

  std::optional<noz::context> ctx;
  noz::series_policy policy = noz::series_policy::standard(max_terms);
  try {
    ctx.emplace(precision, *mode);
    if (guard_digits) policy.guard_digits = *guard_digits;
    if (fixed_terms) {
      if (*fixed_terms > policy.max_terms) policy.max_terms = *fixed_terms;
      policy.fixed_terms = fixed_terms;
    }
    policy.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (repl) return noz::calc::repl_session(std::cin, std::cout, std::cerr, noz::calc::session(*ctx, policy));

  if (eval_opt->count() == 0) {
    std::cerr << app.help();
    return exit_usage;
  }

  try {
    const auto result = noz::calc::evaluate(expression, *ctx, policy);
    for (const auto& note : result.diagnostics) std::cerr << "note: " << note << '\n';
    std::cout << result.rendered << '\n';
    std::cout.flush();
    return std::cout ? exit_ok : exit_eval;
  } catch (const noz::calc::syntax_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const noz::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_eval;
  }
}
