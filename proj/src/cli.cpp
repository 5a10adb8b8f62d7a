#include "cantor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cantor/base_sequence.hpp"
#include "cantor/expansion.hpp"
#include "cantor/json_io.hpp"
#include "cantor/numeric.hpp"
#include "cantor/operators.hpp"
#include "cantor/rationality.hpp"

namespace cantor::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string q;
  std::string x;
  std::string base;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  bool json = false;
};

template <typename T>
const T& require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag ") + flag);
  return *value;
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return value;
}

BaseSequence load_bases(const Options& opt) {
  std::string text = require(opt.q, "--q");
  if (text.starts_with("@")) {
    std::ifstream in(text.substr(1));
    if (!in) throw DomainError("cannot read Q-spec file " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    text.erase(std::find_if_not(text.rbegin(), text.rend(), is_space).base(), text.end());
    text.erase(text.begin(), std::find_if_not(text.begin(), text.end(), is_space));
  }
  return BaseSequence::parse(text);
}

Rational load_x(const Options& opt) {
  Rational x = parse_rational(require(opt.x, "--x"));
  require_unit_interval(x);
  return x;
}

Json header(const char* command, const BaseSequence& bases) {
  return Json{{"schema", kSchema}, {"command", command}, {"q", to_string(bases.spec())}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void approx_line(std::ostream& out, const char* label, const Rational& value) {
  out << label << ": " << approximate(value) << " ≈\n";
}

int cmd_expand(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto x = load_x(opt);
  const auto depth = require(opt.depth, "--depth");
  const auto expansion = expand_greedy(x, bases, depth);
  if (opt.json) {
    auto j = header("expand", bases);
    j["x"] = to_string(x);
    j["depth"] = depth;
    j["expansion"] = to_json(expansion.digits);
    emit(out, j);
  } else {
    out << "digits: " << join_digits(expansion.digits.digits()) << '\n';
    out << "tail: " << to_string(expansion.state.tail) << '\n';
    approx_line(out, "x", x);
  }
  return 0;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto digits = parse_digit_string(require(opt.base, "--base"), bases);
  const std::size_t upto = opt.depth.value_or(digits.size());
  const auto value = evaluate(digits, upto);
  if (opt.json) {
    auto j = header("eval", bases);
    j["digits"] = to_json(digits);
    j["upto"] = upto;
    j["value"] = to_string(value);
    emit(out, j);
  } else {
    out << "value: " << to_string(value) << '\n';
    approx_line(out, "value", value);
  }
  return 0;
}

int cmd_shift(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto x = load_x(opt);
  const auto n = require(opt.n, "--n");
  const OperatorContext ctx(x, bases, n);
  const auto value = shift_power(ctx, n);
  if (opt.json) {
    auto j = header("shift", bases);
    j["x"] = to_string(x);
    j["n"] = n;
    j["value"] = to_string(value);
    emit(out, j);
  } else {
    out << "value: " << to_string(value) << '\n';
    approx_line(out, "value", value);
  }
  return 0;
}

int cmd_gshift(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto x = load_x(opt);
  const auto m = require(opt.m, "--m");
  if (m == 0) throw DomainError("--m must be at least 1");
  const OperatorContext ctx(x, bases, m);
  const auto value = generalized_shift(ctx, m);
  if (opt.json) {
    auto j = header("gshift", bases);
    j["x"] = to_string(x);
    j["m"] = m;
    j["value"] = to_string(value);
    emit(out, j);
  } else {
    out << "value: " << to_string(value) << '\n';
    approx_line(out, "value", value);
  }
  return 0;
}

int cmd_trace(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto x = load_x(opt);
  const auto horizon = require(opt.horizon, "--horizon");
  OperatorContext ctx(x, bases, horizon);
  const auto trace = fractional_trace(ctx, horizon);
  const auto witness = find_collision(trace);
  std::optional<Rational> reconstructed;
  if (witness && witness->m1 >= 1) reconstructed = reconstruct(ctx, *witness);

  if (opt.json) {
    auto j = header("trace", bases);
    j["x"] = to_string(x);
    j["horizon"] = horizon;
    Json entries = Json::array();
    for (const auto& e : trace) entries.push_back(to_json(e));
    j["trace"] = std::move(entries);
    if (witness && reconstructed) {
      j["certificate"] = certificate_json(*witness, x, *reconstructed);
    } else if (witness) {
      j["certificate"] = Json{{"m1", witness->m1}, {"m2", witness->m2}, {"value", to_string(x)}, {"reconstructed", nullptr}};
    } else {
      j["certificate"] = nullptr;
    }
    emit(out, j);
  } else {
    out << "k value integer_component\n";
    for (const auto& e : trace) {
      out << e.k << ' ' << to_string(e.value) << ' ' << to_string(e.integer_component) << '\n';
    }
    if (witness) {
      out << "collision: " << witness->m1 << ',' << witness->m2 << '\n';
      out << "reconstructed: " << (reconstructed ? to_string(*reconstructed) : "n/a") << '\n';
    } else {
      out << "collision: none\n";
    }
  }
  return 0;
}

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

Check run_check(std::string name, const std::function<std::string()>& body) {
  Check c{std::move(name), true, {}};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const IdentityViolation& e) {
    c.passed = false;
    c.detail = e.what();
  }
  return c;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto x = load_x(opt);
  const auto depth = require(opt.depth, "--depth");
  const OperatorContext ctx(x, bases, depth);
  const Integer a = x.get_num();
  const Integer b = x.get_den();
  const auto at = [](std::size_t m) { return "mismatch at m=" + std::to_string(m); };

  std::vector<Check> checks;
  checks.push_back(run_check("gshift-closed-form", [&]() -> std::string {
    for (std::size_t m = 1; m <= depth; ++m) {
      if (generalized_shift(ctx, m) != generalized_shift_via_tail(ctx, m)) return at(m);
    }
    return {};
  }));
  checks.push_back(run_check("gshift-recurrence", [&]() -> std::string {
    for (std::size_t m = 1; m < depth; ++m) {
      if (shift_recurrence(ctx, m) != generalized_shift(ctx, m + 1)) return at(m);
    }
    return {};
  }));
  checks.push_back(run_check("digit-recovery", [&]() -> std::string {
    for (std::size_t m = 1; m <= depth; ++m) {
      if (recover_digit(ctx, m) != ctx.digit(m)) return at(m);
    }
    return {};
  }));
  checks.push_back(run_check("digit-formula", [&]() -> std::string {
    for (std::size_t m = 0; m < depth; ++m) {
      if (digit_formula(a, b, ctx, m).digit != ctx.digit(m + 1)) return at(m);
    }
    return {};
  }));
  checks.push_back(run_check("digit-formula-sufficiency", [&]() -> std::string {
    for (std::size_t m = 1; m <= depth; ++m) {
      if (ctx.partial_sum(m) + shift_power(ctx, m) / ctx.product(m) != x) return at(m);
    }
    return {};
  }));
  checks.push_back(run_check("collision-roundtrip", [&]() -> std::string {
    const auto witness = rationality_certificate(a, b, bases);
    OperatorContext deep(x, bases, witness.m2);
    const auto value = reconstruct(deep, witness);
    if (value != x) return "reconstructed " + to_string(value);
    return {};
  }));

  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (opt.json) {
    auto j = header("verify", bases);
    j["x"] = to_string(x);
    j["depth"] = depth;
    Json list = Json::array();
    for (const auto& c : checks) {
      Json entry{{"name", c.name}, {"passed", c.passed}};
      if (!c.passed) entry["detail"] = c.detail;
      list.push_back(std::move(entry));
    }
    j["checks"] = std::move(list);
    j["passed"] = all;
    emit(out, j);
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << '\n';
    }
  }
  return all ? 0 : 1;
}

int cmd_cylinder(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  const auto digits = parse_digit_string(require(opt.base, "--base"), bases);
  if (digits.tail().kind != Tail::Kind::zeros) {
    throw DomainError("a cylinder base takes no tail marker");
  }
  const Cylinder cylinder(bases, digits.digits());
  const auto interval = cylinder_interval(cylinder);
  std::optional<bool> contains;
  if (!opt.x.empty()) contains = cylinder_contains(cylinder, load_x(opt));
  if (opt.json) {
    auto j = header("cylinder", bases);
    Json base = Json::array();
    for (const auto& c : cylinder.base()) base.push_back(integer_to_json(c));
    j["base"] = std::move(base);
    j["lo"] = to_string(interval.lo);
    j["hi"] = to_string(interval.hi);
    if (contains) {
      j["x"] = opt.x;
      j["contains"] = *contains;
    }
    emit(out, j);
  } else {
    out << "lo: " << to_string(interval.lo) << '\n';
    out << "hi: " << to_string(interval.hi) << '\n';
    if (contains) out << "contains: " << (*contains ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_dual(const Options& opt, std::ostream& out) {
  const auto bases = load_bases(opt);
  std::optional<DigitString> original;
  if (!opt.base.empty()) {
    original = parse_digit_string(opt.base, bases);
  } else {
    const auto x = load_x(opt);
    const auto horizon = require(opt.horizon, "--horizon");
    const auto m = classify_q_rational(x, bases, horizon);
    if (!m) throw DomainError("x does not terminate within the horizon");
    original = expand_greedy(x, bases, *m).digits;
  }
  const auto dual = dual_representation(*original);
  const auto value = evaluate(*original, original->size());
  if (opt.json) {
    auto j = header("dual", bases);
    j["original"] = to_json(*original);
    j["dual"] = to_json(dual);
    j["value"] = to_string(value);
    emit(out, j);
  } else {
    out << "original: " << to_text(*original) << '\n';
    out << "dual: " << to_text(dual) << '\n';
    out << "value: " << to_string(value) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cantor series expansions, shift operators and rationality certificates", "cantor-kit"};
  app.require_subcommand(1);
  Options opt;

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const char* name, const char* description, Handler handler,
                       std::initializer_list<const char*> flags) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--q", opt.q, "base sequence spec, or @file");
    for (std::string_view flag : flags) {
      if (flag == "x") sub->add_option("--x", opt.x, "rational a/b in [0,1)");
      if (flag == "base") sub->add_option("--base", opt.base, "comma-separated digits");
      if (flag == "depth") sub->add_option("--depth", opt.depth, "number of digits");
      if (flag == "horizon") sub->add_option("--horizon", opt.horizon, "last trace index");
      if (flag == "m") sub->add_option("--m", opt.m, "generalized shift index");
      if (flag == "n") sub->add_option("--n", opt.n, "shift power");
    }
    sub->add_flag("--json", opt.json, "JSON output");
    commands.emplace_back(sub, handler);
  };
  add("expand", "greedy digits of x", cmd_expand, {"x", "depth"});
  add("eval", "evaluate a digit string", cmd_eval, {"base", "depth"});
  add("shift", "shift operator sigma^n(x)", cmd_shift, {"x", "n"});
  add("gshift", "generalized shift sigma_m(x)", cmd_gshift, {"x", "m"});
  add("trace", "fractional-part trace, collision and reconstruction", cmd_trace, {"x", "horizon"});
  add("verify", "check every operator identity for x", cmd_verify, {"x", "depth"});
  add("cylinder", "cylinder interval and membership", cmd_cylinder, {"base", "x"});
  add("dual", "dual representation of a terminating expansion", cmd_dual, {"base", "x", "horizon"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(opt, out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const IdentityViolation& e) {
      err << "internal error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace cantor::cli
