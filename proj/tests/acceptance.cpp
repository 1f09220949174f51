// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "noz/calc/session.hpp"
#include "noz/decimal.hpp"
#include "noz/functions.hpp"
#include "noz/oracle/rational.hpp"
#include "support/generators.hpp"
#include "support/ulp.hpp"

namespace {

using clock_type = std::chrono::steady_clock;
using noz::context;
using noz::decimal;

const std::string paper_e =
    "2.718281828459045235360287471352662497757247093699959574966967627724076630353547594571382178525166427E0";

struct outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

outcome golden_e() {
  const auto start = clock_type::now();
  const std::string dynamic = format(noz::exp(decimal::from_integer(1), context(100)));
  const std::string fixed = format(noz::exp(decimal::from_integer(1), context(100), noz::series_policy::fixed(70)));
  const double t = seconds_since(start);
  const bool ok = dynamic == paper_e && fixed == paper_e && t < 1.0;
  return {ok, "dynamic " + std::string(dynamic == paper_e ? "match" : "MISMATCH") + ", 70 terms " +
                  (fixed == paper_e ? "match" : "MISMATCH") + ", " + fmt_seconds(t) + " (< 1s)"};
}

// One randomized oracle case: operands, operation and precision.
struct oracle_case {
  std::string a, b;
  int op;
  std::uint64_t precision;
};

std::vector<oracle_case> oracle_cases() {
  std::mt19937_64 rng(20070514);
  std::vector<oracle_case> cases;
  cases.reserve(10'000);
  while (cases.size() < 10'000) {
    oracle_case c;
    c.a = noz::testing::random_decimal_text(rng);
    c.b = noz::testing::random_partner_text(rng, c.a);
    c.op = static_cast<int>(rng() % 4);
    c.precision = 1 + rng() % 200;
    if (c.op == 3 && decimal::parse_exact(c.b).is_zero()) continue;
    cases.push_back(std::move(c));
  }
  return cases;
}

// Runs every case under all five modes; returns the formatted results and
// counts mismatches against the oracle.
template <class Dec>
std::vector<std::string> run_oracle_suite(const std::vector<oracle_case>& cases, std::size_t& failures,
                                          std::string& first_failure) {
  using namespace noz::oracle;
  std::vector<std::string> results;
  results.reserve(cases.size() * 5);
  failures = 0;
  for (const auto& c : cases) {
    const Dec a = Dec::parse_exact(c.a);
    const Dec b = Dec::parse_exact(c.b);
    const rational qa = to_rational(a);
    const rational qb = to_rational(b);
    rational exact;
    switch (c.op) {
      case 0: exact = rat_add(qa, qb); break;
      case 1: exact = rat_sub(qa, qb); break;
      case 2: exact = rat_mul(qa, qb); break;
      default: exact = rat_div(qa, qb); break;
    }
    for (auto mode : noz::testing::all_modes) {
      const context ctx(c.precision, mode);
      Dec got;
      switch (c.op) {
        case 0: got = add(a, b, ctx); break;
        case 1: got = sub(a, b, ctx); break;
        case 2: got = mul(a, b, ctx); break;
        default: got = div(a, b, ctx); break;
      }
      const Dec want = rat_round<Dec>(exact, c.precision, mode);
      if (got != want) {
        if (failures == 0)
          first_failure = c.a + " " + "+-*/"[c.op] + " " + c.b + " P=" + std::to_string(c.precision) + " " +
                          std::string(noz::to_string(mode)) + ": got " + format(got) + " want " + format(want);
        ++failures;
      }
      results.push_back(format(got));
    }
  }
  return results;
}

struct oracle_runs {
  std::vector<std::string> lb9, lb1;
  std::size_t fail9 = 0, fail1 = 0;
  std::string first9, first1;
  double t9 = 0, t1 = 0;
};

const oracle_runs& oracle_results() {
  static const oracle_runs runs = [] {
    oracle_runs r;
    const auto cases = oracle_cases();
    auto start = clock_type::now();
    r.lb9 = run_oracle_suite<noz::basic_decimal<9>>(cases, r.fail9, r.first9);
    r.t9 = seconds_since(start);
    start = clock_type::now();
    r.lb1 = run_oracle_suite<noz::basic_decimal<1>>(cases, r.fail1, r.first1);
    r.t1 = seconds_since(start);
    return r;
  }();
  return runs;
}

outcome correct_rounding() {
  const auto& r = oracle_results();
  const bool ok = r.fail9 == 0 && r.t9 < 60.0;
  std::string detail = std::to_string(r.lb9.size()) + " checks (10000 cases x 5 modes), " +
                       std::to_string(r.fail9) + " mismatches, " + fmt_seconds(r.t9) + " (< 60s)";
  if (r.fail9 != 0) detail += "; first: " + r.first9;
  return {ok, detail};
}

outcome limb_transparency() {
  const auto& r = oracle_results();
  std::size_t differ = 0;
  for (std::size_t i = 0; i < r.lb9.size(); ++i)
    if (r.lb1[i] != r.lb9[i]) ++differ;
  const bool ok = r.fail1 == 0 && r.fail9 == 0 && differ == 0 && r.lb1.size() == r.lb9.size();
  std::string detail = "LB=1: " + std::to_string(r.fail1) + " mismatches in " + fmt_seconds(r.t1) +
                       "; LB=9 vs LB=1: " + std::to_string(differ) + " differing results";
  if (r.fail1 != 0) detail += "; first: " + r.first1;
  return {ok, detail};
}

outcome runtime_precision_change() {
  std::istringstream in(":prec 4\n(1+1E-8)-1\n:prec 20\n(1+1E-8)-1\n");
  std::ostringstream out, err;
  const int status = noz::calc::repl_session(in, out, err);
  const bool ok = status == 0 && out.str() == "0E0\n1E-8\n" && err.str().empty();
  std::string shown = out.str();
  std::replace(shown.begin(), shown.end(), '\n', ' ');
  return {ok, "transcript: " + shown};
}

outcome cancellation_demo() {
  const std::string golden =
      "Catastrophic cancellation: (1 + 1E-8) - 1\n"
      "  precision 4:  0E0\n"
      "    1 + 1E-8 rounds to 1.000 at 4 digits, so subtracting 1 leaves nothing.\n"
      "  precision 50: 1E-8\n"
      "    50 digits hold 1.00000001 exactly, so the small term survives.\n";
  std::ostringstream a, b;
  const int sa = noz::calc::demo_cancellation(a);
  const int sb = noz::calc::demo_cancellation(b);
  const bool ok = sa == 0 && sb == 0 && a.str() == golden && b.str() == golden;
  return {ok, ok ? "byte-identical to golden on two runs" : "output differs from golden"};
}

outcome identity_suites() {
  std::mt19937_64 rng(1000);
  std::size_t failures = 0;
  const decimal zero;
  const decimal one = decimal::from_integer(1);
  for (int i = 0; i < 1000; ++i) {
    const decimal x = noz::testing::random_decimal(rng);
    const decimal y = noz::testing::random_decimal(rng);
    const context exact_ctx(std::max<std::uint64_t>(x.digit_count(), 1) + 200);
    const context ctx(1 + rng() % 200, noz::testing::all_modes[rng() % 5]);
    const bool ok = add(x, zero, exact_ctx) == x && add(x, y, ctx) == add(y, x, ctx) &&
                    mul(x, one, exact_ctx) == x && mul(x, y, ctx) == mul(y, x, ctx) &&
                    mul(x, zero, ctx) == zero && negate(negate(x)) == x && sub(x, x, ctx) == zero &&
                    round(round(x, ctx), ctx) == round(x, ctx) &&
                    decimal::parse(format(x), context(x.digit_count())) == x;
    if (!ok) ++failures;
  }
  return {failures == 0, "1000 values, " + std::to_string(failures) + " failures"};
}

decimal random_in(std::mt19937_64& rng, int bound, int digits) {
  // Uniform-ish value in [-bound, bound] with `digits` significant digits.
  std::uniform_real_distribution<double> dist(-bound, bound);
  const double v = dist(rng);
  std::string mantissa = std::to_string(static_cast<long long>(std::abs(v) * 1e15));
  std::string text = (v < 0 ? "-" : "") + mantissa + "E-15";
  decimal x = decimal::parse(text, context(static_cast<std::uint64_t>(digits)));
  if (compare(abs(x), decimal::from_integer(bound)) > 0) x = decimal::from_integer(v < 0 ? -bound : bound);
  return x;
}

outcome function_identities() {
  const std::uint64_t p = 50;
  const context ctx(p);
  const decimal one = decimal::from_integer(1);
  std::mt19937_64 rng(31);
  std::size_t pyth_fail = 0, exp_fail = 0;
  for (int i = 0; i < 100; ++i) {
    const decimal x = random_in(rng, 10, 16);
    const decimal s = noz::sin(x, ctx);
    const decimal c = noz::cos(x, ctx);
    const decimal sum = add(mul(s, s, ctx), mul(c, c, ctx), ctx);
    if (!noz::testing::within_ulps(sum, one, one, p, 2)) ++pyth_fail;
  }
  for (int i = 0; i < 100; ++i) {
    const decimal a = random_in(rng, 5, 16);
    const decimal b = random_in(rng, 5, 16);
    const decimal lhs = mul(noz::exp(a, ctx), noz::exp(b, ctx), ctx);
    const decimal rhs = noz::exp(add(a, b, ctx), ctx);
    if (!noz::testing::within_ulps(lhs, rhs, rhs, p, 2)) ++exp_fail;
  }
  return {pyth_fail == 0 && exp_fail == 0, "sin^2+cos^2: " + std::to_string(pyth_fail) +
                                                 "/100 beyond 2 ulp; exp(a)exp(b) vs exp(a+b): " +
                                                 std::to_string(exp_fail) + "/100 beyond 2 ulp (P=50)"};
}

outcome factorial_exactness() {
  std::size_t failures = 0;
  boost::multiprecision::cpp_int product = 1;
  for (unsigned n = 0; n <= 200; ++n) {
    if (n > 1) product *= n;
    const auto digits = static_cast<std::uint64_t>(product.str().size());
    const decimal got = noz::factorial<9>(n, context(digits));
    if (noz::oracle::to_rational(got) != noz::oracle::rational(product)) ++failures;
  }
  boost::multiprecision::cpp_int f100 = 1;
  for (unsigned k = 2; k <= 100; ++k) f100 *= k;
  const decimal got100 = noz::factorial<9>(100, context(200));
  const auto digits100 = std::int64_t{got100.exponent()} + 1;
  const bool ok = failures == 0 && digits100 == 158 && f100.str().size() == 158;
  return {ok, "n=0..200: " + std::to_string(failures) + " mismatches; 100! has " + std::to_string(digits100) +
                  " digits"};
}

outcome precision_speed() {
  std::mt19937_64 rng(6);
  auto random_operand = [&](std::uint64_t digits) {
    std::string s(digits, '0');
    for (auto& ch : s) ch = static_cast<char>('0' + rng() % 10);
    s[0] = static_cast<char>('1' + rng() % 9);
    s[digits - 1] = static_cast<char>('1' + rng() % 9);
    return decimal::normalize(false, s, 0);
  };
  struct level {
    std::uint64_t precision;
    int repeats;
    double per_op = 0;
  };
  std::vector<level> levels = {{100, 4000}, {1000, 200}, {10000, 3}};
  double worst_10k = 0;
  for (auto& l : levels) {
    const context ctx(l.precision);
    const decimal a = random_operand(l.precision);
    const decimal b = random_operand(l.precision);
    double best = 1e9;
    for (int trial = 0; trial < 3; ++trial) {
      const auto start = clock_type::now();
      for (int r = 0; r < l.repeats; ++r) {
        const decimal c = mul(a, b, ctx);
        if (c.digit_count() > l.precision) return {false, "product exceeded precision"};
      }
      best = std::min(best, seconds_since(start) / l.repeats);
    }
    l.per_op = best;
    if (l.precision == 10000) {
      const auto start = clock_type::now();
      (void)mul(a, b, ctx);
      worst_10k = seconds_since(start);
    }
  }
  const bool monotone = levels[0].per_op < levels[1].per_op && levels[1].per_op < levels[2].per_op;
  bool bound_checked = true;
  try {
    (void)context(2'000'000'001);
    bound_checked = false;
  } catch (const std::invalid_argument&) {
  }
  try {
    (void)context(2'000'000'000);
  } catch (...) {
    bound_checked = false;
  }
  std::ostringstream os;
  os.precision(3);
  os << "per-mul: P=1e2 " << levels[0].per_op * 1e6 << "us, P=1e3 " << levels[1].per_op * 1e6 << "us, P=1e4 "
     << levels[2].per_op * 1e3 << "ms (single run " << worst_10k * 1e3 << "ms < 1s); 2e9 bound "
     << (bound_checked ? "enforced" : "NOT enforced");
  return {monotone && worst_10k < 1.0 && levels[2].per_op < 1.0 && bound_checked, os.str()};
}

}  // namespace

int main() {
  struct criterion {
    const char* name;
    std::function<outcome()> check;
  };
  const std::vector<criterion> criteria = {
      {"golden e reproduction", golden_e},
      {"correct-rounding oracle suite", correct_rounding},
      {"limb transparency (LB=1 vs LB=9)", limb_transparency},
      {"runtime precision change (REPL)", runtime_precision_change},
      {"cancellation demo golden output", cancellation_demo},
      {"identity suites", identity_suites},
      {"elementary-function identities", function_identities},
      {"factorial exactness", factorial_exactness},
      {"precision/speed trade-off", precision_speed},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " -- " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
