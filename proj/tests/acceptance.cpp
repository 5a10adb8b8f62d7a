// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/base_sequence.hpp"
#include "cantor/expansion.hpp"
#include "cantor/operators.hpp"
#include "cantor/rationality.hpp"
#include "oracle.hpp"

using namespace cantor;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct CorpusPoint {
  Rational x;
  BaseSequence bases;
};

constexpr std::size_t kCorpusSize = 1000;
constexpr unsigned long kCorpusMaxDen = 10000;
constexpr std::size_t kOperatorDepth = 100;
constexpr std::size_t kConvergenceDepth = 60;
constexpr std::size_t kDualCount = 200;
constexpr std::size_t kDualExtra = 20;
constexpr unsigned long kSweepMaxDen = 50;
constexpr double kSweepSeconds = 60.0;

std::vector<CorpusPoint> make_corpus() {
  std::mt19937_64 rng(20261015);
  std::vector<CorpusPoint> corpus;
  corpus.reserve(kCorpusSize);
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const auto spec = oracle::random_spec(rng);
    corpus.push_back({oracle::random_rational(rng, kCorpusMaxDen), BaseSequence::parse(spec)});
  }
  return corpus;
}

std::string describe(const CorpusPoint& p) { return to_string(p.x) + " over " + to_string(p.bases.spec()); }

template <typename Body>
Outcome guarded(Body body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Outcome sweep_certificates(std::size_t& max_distinct_excess_out, std::size_t& sweep_count, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  long worst = -1000;
  for (const char* spec : {"const:2", "const:10", "cycle:2,3", "rule:succ"}) {
    const auto q = BaseSequence::parse(spec);
    for (unsigned long b = 1; b <= kSweepMaxDen; ++b) {
      for (unsigned long a = 0; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        ++sweep_count;
        const auto x = make_rational(a, b);
        const auto w = rationality_certificate(a, b, q);
        const OperatorContext ctx(x, q, w.m2);
        if (w.m2 > b + 1 || w.m1 == 0 || reconstruct(ctx, w) != x) {
          out = {false, "failed at " + to_string(x) + " over " + spec};
        }
        const auto trace = fractional_trace(x, q, b + 2);
        std::set<Rational> distinct;
        for (const auto& e : trace) distinct.insert(e.value);
        worst = std::max(worst, static_cast<long>(distinct.size()) - static_cast<long>(b));
      }
    }
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  max_distinct_excess_out = worst > 0 ? static_cast<std::size_t>(worst) : 0;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_approximate(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  const std::string suffix = "≈";
  while (std::getline(in, line)) {
    if (line.size() >= suffix.size() && line.compare(line.size() - suffix.size(), suffix.size(), suffix) == 0) continue;
    out += line + '\n';
  }
  return out;
}

struct CliCase {
  const char* name;
  const char* args;
  int exit_code;
};

Outcome cli_conformance() {
  const CliCase cases[] = {
      {"expand_one_third", "expand --q const:2 --x 1/3 --depth 6", 0},
      {"trace_one_third", "trace --q const:2 --x 1/3 --horizon 4 --json", 0},
      {"expand_out_of_range", "expand --q const:2 --x 3/2", 1},
  };
  Outcome out;
  for (const auto& c : cases) {
    const std::string stdout_path = std::string("cli_") + c.name + ".stdout";
    const std::string stderr_path = std::string("cli_") + c.name + ".stderr";
    const std::string command =
        std::string(CANTOR_KIT_BINARY) + " " + c.args + " > " + stdout_path + " 2> " + stderr_path;
    const int status = std::system(command.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const std::string golden = std::string(CANTOR_GOLDEN_DIR) + "/" + c.name;
    const bool same_out = strip_approximate(read_file(stdout_path)) == read_file(golden + ".stdout");
    const bool same_err = read_file(stderr_path) == read_file(golden + ".stderr");
    if (code != c.exit_code || !same_out || !same_err) {
      out.passed = false;
      out.detail += std::string(c.name) + " (exit " + std::to_string(code) + (same_out ? "" : ", stdout differs") +
                    (same_err ? "" : ", stderr differs") + ") ";
    }
  }
  if (out.passed) out.detail = "3 commands match golden payloads and exit codes";
  return out;
}

}  // namespace

int main() {
  const auto corpus = make_corpus();
  int failures = 0;
  const auto report = [&](int id, const char* title, const Outcome& o) {
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << id << ". " << title;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    if (!o.passed) ++failures;
  };

  std::size_t distinct_excess = 0;
  std::size_t sweep_count = 0;
  double sweep_seconds = 0;
  auto c1 = guarded([&] { return sweep_certificates(distinct_excess, sweep_count, sweep_seconds); });
  if (c1.passed && sweep_seconds >= kSweepSeconds) c1 = {false, "sweep took " + std::to_string(sweep_seconds) + " s"};
  if (c1.passed) {
    c1.detail = std::to_string(sweep_count) + " fractions over 4 base sequences in " +
                std::to_string(sweep_seconds).substr(0, 5) + " s";
  }
  report(1, "Collision certificate round-trip, all reduced a/b with b <= 50", c1);

  // Criteria 2-4 share the corpus and one context per point.
  Outcome c2{true, {}}, c3{true, {}}, c4{true, {}}, c5{true, {}};
  std::size_t checks2 = 0, checks3 = 0, checks4 = 0, checks5 = 0;
  for (const auto& p : corpus) {
    const auto fail = [&](Outcome& o, const std::string& what) {
      if (o.passed) o = {false, what + " at " + describe(p)};
    };
    try {
      const oracle::Series series(p.x, p.bases, kOperatorDepth + 4);
      const OperatorContext ctx(p.x, p.bases, kOperatorDepth + 1);
      const Integer a = p.x.get_num();
      const Integer b = p.x.get_den();

      for (std::size_t m = 0; m <= kOperatorDepth; ++m) {
        ++checks2;
        if (digit_formula(a, b, ctx, m).digit != series.greedy.digits[m]) fail(c2, "digit mismatch m=" + std::to_string(m));
      }
      for (std::size_t m = 1; m <= kOperatorDepth; ++m) {
        ++checks3;
        if (shift_recurrence(ctx, m) != series.generalized_shift(m + 1, p.bases)) fail(c3, "recurrence m=" + std::to_string(m));
        if (recover_digit(ctx, m) != series.greedy.digits[m - 1]) fail(c3, "digit recovery m=" + std::to_string(m));
      }
      for (std::size_t m = 1; m <= kOperatorDepth; ++m) {
        ++checks4;
        const auto eq2 = generalized_shift(ctx, m);
        const Rational via_tail = make_rational(ctx.delta(m - 1), 1) + series.shift_power(m);
        if (eq2 != via_tail / ctx.product(m - 1) || eq2 != generalized_shift_via_tail(ctx, m)) {
          fail(c4, "m=" + std::to_string(m));
        }
      }
      const auto expansion = expand_greedy(p.x, p.bases, kConvergenceDepth);
      for (std::size_t n = 0; n <= kConvergenceDepth; ++n) {
        ++checks5;
        const Rational gap = p.x - evaluate(expansion.digits, n);
        const Integer pn = p.bases.product_prefix(n);
        if (gap != shift_power(ctx, n) / pn || gap != series.shift_power(n) / pn || gap < 0 ||
            gap >= make_rational(1, pn)) {
          fail(c5, "n=" + std::to_string(n));
        }
      }
    } catch (const std::exception& e) {
      for (Outcome* o : {&c2, &c3, &c4, &c5}) fail(*o, std::string("exception ") + e.what());
    }
  }
  if (c2.passed) c2.detail = std::to_string(checks2) + " digits agree";
  if (c3.passed) c3.detail = std::to_string(checks3) + " (m, x, Q) triples, both relationships";
  if (c4.passed) c4.detail = std::to_string(checks4) + " exact equalities";
  if (c5.passed) c5.detail = std::to_string(checks5) + " depths";
  report(2, "Digit formula equals greedy digit, m <= 100", c2);
  report(3, "Generalized shift recurrence and digit recovery, m <= 100", c3);
  report(4, "Generalized shift closed form equals (delta_{m-1} + sigma^m(x)) / P_{m-1}", c4);
  report(5, "x - theta_n = sigma^n(x) / P_n < 1 / P_n, n <= 60", c5);

  auto c6 = guarded([&] {
    std::mt19937_64 rng(6);
    for (std::size_t i = 0; i < kDualCount; ++i) {
      const auto q = BaseSequence::parse(oracle::random_spec(rng));
      const std::size_t m = 1 + rng() % 15;
      std::vector<Integer> digits;
      for (std::size_t k = 1; k <= m; ++k) {
        const unsigned long lo = k == m ? 1 : 0;
        digits.emplace_back(lo + rng() % (q.q_at(k).get_ui() - lo));
      }
      const DigitString original(q, digits, Tail::zeros());
      const auto dual = dual_representation(original);
      const auto value = evaluate(original, m);
      for (std::size_t n = m; n <= m + kDualExtra; ++n) {
        if (evaluate(dual, n) + make_rational(1, q.product_prefix(n)) != value) {
          return Outcome{false, "n=" + std::to_string(n) + " for " + to_text(original)};
        }
      }
    }
    return Outcome{true, std::to_string(kDualCount) + " expansions, n = m..m+20"};
  });
  report(6, "Dual representation telescoping equivalence", c6);

  Outcome c7{distinct_excess == 0 && c1.passed, {}};
  c7.detail = c7.passed ? "distinct trace values <= b over " + std::to_string(sweep_count) + " fractions"
                        : "exceeded b by " + std::to_string(distinct_excess);
  report(7, "Pigeonhole bound on distinct trace values", c7);

  report(8, "CLI conformance", guarded(cli_conformance));

  return failures == 0 ? 0 : 1;
}
