#include "weylsb/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "weylsb/cli/config.hpp"
#include "weylsb/cli/expr.hpp"
#include "weylsb/cli/json_io.hpp"
#include "weylsb/weylsb.hpp"

namespace weylsb::cli {
namespace {

struct Source {
  std::string text;
  std::string origin;  // file name, or empty for an inline argument
  std::size_t line = 1;
};

// Input error raised by the driver itself (wrong operand count and the like).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A failed `verify`; reported like an invariant violation.
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Source> collect(const std::vector<std::string>& inputs) {
  std::vector<Source> out;
  for (const auto& arg : inputs) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) {
      out.push_back({arg, "", 1});
      continue;
    }
    std::ifstream in(arg);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back({line, arg, number});
    }
  }
  return out;
}

// Prefixes parse errors from files with the file name.
template <class F>
auto with_origin(const Source& s, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const ParseError& e) {
    if (s.origin.empty()) throw;
    throw ParseError(e.line(), e.column(), s.origin + ": " + e.detail());
  }
}

struct Options {
  std::string config_path;
  std::string output;
  std::optional<std::uint64_t> degree_cap;
  std::optional<std::size_t> nvars;
  std::vector<std::string> inputs;
  bool homog = false;
  bool homogenize_inputs = false;
  std::uint64_t seed = 1;
  std::size_t cases = 50;
  std::optional<std::uint64_t> degree_bound;
};

class Driver {
 public:
  Driver(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), ctx_(cfg_.context()), out_(out) {}

  bool json() const { return cfg_.output == OutputFormat::json; }

  std::vector<WeylOperator> weyl_inputs(const std::vector<std::string>& inputs) const {
    std::vector<WeylOperator> ops;
    for (const auto& s : collect(inputs)) ops.push_back(with_origin(s, [&] {
      return parse_operator(s.text, cfg_.n, cfg_.field, s.line);
    }));
    return ops;
  }

  std::vector<HomogOperator> homog_inputs(const std::vector<std::string>& inputs) const {
    std::vector<HomogOperator> ops;
    for (const auto& s : collect(inputs)) ops.push_back(with_origin(s, [&] {
      return parse_homog_operator(s.text, cfg_.n, cfg_.field, s.line);
    }));
    return ops;
  }

  template <class Op>
  std::string show(const Op& op) const {
    return format_operator(op, &ctx_);
  }

  template <class Op>
  void emit_list(const char* command, const std::vector<Op>& ops) {
    if (json()) {
      Json arr = Json::array();
      for (const auto& op : ops) arr.push_back(to_json(op));
      out_ << Json{{"command", command}, {"result", arr}}.dump() << '\n';
    } else {
      for (const auto& op : ops) out_ << show(op) << '\n';
    }
  }

  template <class Op>
  void normalize(const std::vector<Op>& ops) { emit_list("normalize", ops); }

  template <class Op>
  void mul(const std::vector<Op>& ops) {
    if (ops.empty()) throw UsageError("mul needs at least one operand");
    Op acc = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) acc = acc * ops[i];
    emit_list("mul", std::vector<Op>{acc});
  }

  template <class Op>
  void exp(const std::vector<Op>& ops) {
    Json arr = Json::array();
    for (const auto& op : ops) {
      std::ostringstream idx;
      if constexpr (std::is_same_v<Op, WeylOperator>) {
        const auto lead = exp_delta(ctx_, op);
        idx << lead.exponent;
        arr.push_back({{"exponent", to_json(lead.exponent)}, {"coeff", lead.coefficient.to_string()}});
      } else {
        const auto lead = exp_homog(ctx_, op);
        idx << lead.exponent;
        arr.push_back({{"exponent", to_json(lead.exponent)}, {"coeff", lead.coefficient.to_string()}});
      }
      if (!json()) out_ << idx.str() << '\n';
    }
    if (json()) out_ << Json{{"command", "exp"}, {"result", arr}}.dump() << '\n';
  }

  void symbols(const std::vector<WeylOperator>& ops) {
    std::vector<WeylOperator> out;
    for (const auto& p : ops) out.push_back(symbol(ctx_, p));
    emit_list("symbol", out);
  }

  void homogenize_all(const std::vector<WeylOperator>& ops) {
    std::vector<HomogOperator> out;
    for (const auto& p : ops) out.push_back(homogenize(p));
    emit_list("homogenize", out);
  }

  void divide_cmd(const std::vector<HomogOperator>& ops) {
    if (ops.empty()) throw UsageError("divide needs a dividend");
    const std::vector<HomogOperator> divisors(ops.begin() + 1, ops.end());
    const auto result = divide(ctx_, ops.front(), divisors);
    if (auto bad = check_division(ctx_, ops.front(), divisors, result)) throw InvariantViolation(*bad);
    if (json()) {
      Json q = Json::array();
      for (const auto& qi : result.quotients) q.push_back(to_json(qi));
      out_ << Json{{"command", "divide"}, {"result", {{"quotients", q}, {"remainder", to_json(result.remainder)}}}}.dump()
           << '\n';
      return;
    }
    for (std::size_t i = 0; i < result.quotients.size(); ++i) {
      out_ << "Q" << i + 1 << " = " << show(result.quotients[i]) << '\n';
    }
    out_ << "R = " << show(result.remainder) << '\n';
  }

  StandardBasisReport pipeline(const std::vector<WeylOperator>& gens) const {
    CompletionOptions opts;
    opts.degree_cap = cfg_.degree_cap;
    return std_basis_pipeline(ctx_, gens, opts);
  }

  void std_basis(const std::vector<WeylOperator>& gens) {
    const auto report = pipeline(gens);
    if (json()) {
      out_ << Json{{"command", "std-basis"}, {"result", to_json(report)}}.dump() << '\n';
      return;
    }
    out_ << "homogeneous basis:\n";
    for (const auto& g : report.homog_basis) out_ << "  " << show(g) << '\n';
    out_ << "delta basis:\n";
    for (const auto& p : report.delta_basis) out_ << "  " << show(p) << '\n';
    out_ << "symbols:\n";
    for (const auto& s : report.symbols) out_ << "  " << show(s) << '\n';
    out_ << "staircase:";
    for (const auto& m : report.staircase) out_ << ' ' << m;
    out_ << "\npairs processed: " << report.stats.pairs_processed
         << ", reductions to zero: " << report.stats.reductions_to_zero
         << ", max degree: " << report.stats.max_degree << '\n';
  }

  void gr_gens(const std::vector<WeylOperator>& gens) { emit_list("gr-gens", pipeline(gens).symbols); }

  void staircase(const std::vector<WeylOperator>& gens) {
    const auto report = pipeline(gens);
    if (json()) {
      Json arr = Json::array();
      for (const auto& m : report.staircase) arr.push_back(to_json(m));
      out_ << Json{{"command", "staircase"}, {"result", arr}}.dump() << '\n';
      return;
    }
    for (const auto& m : report.staircase) out_ << m << '\n';
    if (cfg_.n == 1) out_ << grid(report.staircase);
  }

  // Rows are D-exponents (top = largest), columns x-exponents; '#' marks Exp.
  static std::string grid(const std::vector<MultiIndex>& stairs) {
    Exponent amax = 0, bmax = 0;
    for (const auto& m : stairs) {
      amax = std::max(amax, m.alpha(0));
      bmax = std::max(bmax, m.beta(0));
    }
    std::string out;
    for (Exponent b = bmax + 1;; --b) {
      out += b < 10 ? " " + std::to_string(b) + " " : std::to_string(b) + " ";
      for (Exponent a = 0; a <= amax + 1; ++a) out += in_upper_set(stairs, MultiIndex({a}, {b})) ? '#' : '.';
      out += '\n';
      if (b == 0) break;
    }
    return out;
  }

  void verify(const Options& o) {
    FuzzOptions fo;
    fo.seed = o.seed;
    fo.cases = o.cases;
    fo.max_vars = std::min<std::size_t>(cfg_.n, 3);
    const auto report = algebra_fuzz(fo);
    Json result;
    Json suites = Json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures},
                        {"first_counterexample", s.first_counterexample}});
      if (!json()) {
        out_ << s.name << ": " << s.cases << " cases, " << s.failures << " failures\n";
        if (s.failures > 0) out_ << "  first counterexample: " << s.first_counterexample << '\n';
      }
    }
    result["fuzz"] = {{"seed", o.seed}, {"suites", suites}, {"failures", report.total_failures()}};
    if (!json()) out_ << report.total_failures() << " failures\n";
    bool ok = report.total_failures() == 0;

    if (!o.inputs.empty()) {
      const auto gens = weyl_inputs(o.inputs);
      const auto pipe = pipeline(gens);
      std::uint64_t max_deg = 0;
      for (const auto& h : pipe.homog_generators) max_deg = std::max(max_deg, *graded_degree(h));
      const std::uint64_t d = o.degree_bound.value_or(std::max<std::uint64_t>(max_deg + 4, 6));
      const auto witness = truncated_exponents(ctx_, gens, d);
      const auto agreement = compare_with_pipeline(ctx_, pipe, witness);
      Json stairs = Json::array();
      for (const auto& m : agreement.oracle_staircase) stairs.push_back(to_json(m));
      result["oracle"] = {{"degree_bound", d}, {"window", agreement.window}, {"full_window", agreement.full_window},
                          {"agree", agreement.agree}, {"oracle_staircase", stairs},
                          {"discrepancies", agreement.discrepancies}};
      if (!json()) {
        out_ << "oracle (d = " << d << ", window " << agreement.window
             << (agreement.full_window ? ", full" : ", partial") << "): "
             << (agreement.agree ? "agree" : "DISAGREE") << '\n';
        for (const auto& msg : agreement.discrepancies) out_ << "  " << msg << '\n';
      }
      ok = ok && agreement.agree;
    }
    if (json()) out_ << Json{{"command", "verify"}, {"result", result}}.dump() << '\n';
    if (!ok) throw VerificationFailed("verification failed");
  }

 private:
  RunConfig cfg_;
  OrderContext ctx_;
  std::ostream& out_;
};

void dispatch(const std::string& command, Driver& d, const Options& o) {
  if (command == "normalize") {
    if (o.homog) d.normalize(d.homog_inputs(o.inputs)); else d.normalize(d.weyl_inputs(o.inputs));
  } else if (command == "mul") {
    if (o.homog) d.mul(d.homog_inputs(o.inputs)); else d.mul(d.weyl_inputs(o.inputs));
  } else if (command == "exp") {
    if (o.homog) d.exp(d.homog_inputs(o.inputs)); else d.exp(d.weyl_inputs(o.inputs));
  } else if (command == "symbol") {
    d.symbols(d.weyl_inputs(o.inputs));
  } else if (command == "homogenize") {
    d.homogenize_all(d.weyl_inputs(o.inputs));
  } else if (command == "divide") {
    if (o.homogenize_inputs) {
      std::vector<HomogOperator> ops;
      for (const auto& p : d.weyl_inputs(o.inputs)) ops.push_back(homogenize(p));
      d.divide_cmd(ops);
    } else {
      d.divide_cmd(d.homog_inputs(o.inputs));
    }
  } else if (command == "std-basis") {
    d.std_basis(d.weyl_inputs(o.inputs));
  } else if (command == "gr-gens") {
    d.gr_gens(d.weyl_inputs(o.inputs));
  } else if (command == "staircase") {
    d.staircase(d.weyl_inputs(o.inputs));
  } else if (command == "verify") {
    d.verify(o);
  }
}

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
  Json extra = Json::object();
};

void report(const Failure& f, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    Json e = {{"code", f.code}, {"message", f.message}};
    e.update(f.extra);
    out << Json{{"error", e}}.dump() << '\n';
  } else {
    err << "error: " << f.message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard bases of left ideals in the Weyl algebra via homogenization"};
  app.name("weylsb");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Config file (n, p, q, tiebreak, field, ...)");
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--degree-cap", o.degree_cap, "Largest S-pair degree completion may reach");
  app.add_option("-n,--nvars", o.nvars, "Number of variables (overrides the config)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"normalize", "Print operators in normal order"},
      {"mul", "Multiply operators left to right"},
      {"exp", "Leading exponent under the delta ordering"},
      {"symbol", "Principal symbol"},
      {"homogenize", "Homogenize into A_n[t]"},
      {"divide", "Divide the first operator by the rest in A_n[t]"},
      {"std-basis", "Standard basis report of the ideal generated by the inputs"},
      {"gr-gens", "Generators of the graded ideal"},
      {"staircase", "Minimal generators of the exponent set"},
      {"verify", "Randomized self-checks, plus an oracle comparison when generators are given"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", o.inputs, "Expressions or files with one expression per line");
    if (name == "normalize" || name == "mul" || name == "exp") {
      sub->add_flag("--homog", o.homog, "Parse inputs in A_n[t] (allows t)");
    }
    if (name == "divide") {
      sub->add_flag("--homogenize", o.homogenize_inputs, "Parse inputs in A_n and homogenize them");
    }
    if (name == "verify") {
      sub->add_option("--seed", o.seed, "Fuzzer seed");
      sub->add_option("--cases", o.cases, "Cases per fuzz suite");
      sub->add_option("--degree-bound", o.degree_bound, "Oracle truncation degree");
    }
  }

  bool json = std::find(args.begin(), args.end(), "json") != args.end();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report({kInputError, "usage_error", e.what()}, json, out, err);
    return kInputError;
  }

  try {
    RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    if (o.nvars) {
      if (*o.nvars == 0) throw ConfigError(0, "n must be at least 1");
      if (*o.nvars != cfg.n && (!cfg.p.empty() || !cfg.variable_order.empty())) {
        throw ConfigError(0, "--nvars conflicts with the weights in the config");
      }
      cfg.n = *o.nvars;
    }
    if (!o.output.empty()) cfg.output = parse_output(o.output);
    if (o.degree_cap) cfg.degree_cap = *o.degree_cap;
    json = cfg.output == OutputFormat::json;
    Driver driver(cfg, out);
    dispatch(app.get_subcommands().front()->get_name(), driver, o);
    return kSuccess;
  } catch (const ParseError& e) {
    report({kInputError, "parse_error", e.what(), {{"line", e.line()}, {"column", e.column()}}}, json, out, err);
    return kInputError;
  } catch (const ConfigError& e) {
    report({kInputError, "config_error", e.what()}, json, out, err);
    return kInputError;
  } catch (const UsageError& e) {
    report({kInputError, "usage_error", e.what()}, json, out, err);
    return kInputError;
  } catch (const DegreeCapReached& e) {
    report({kDegreeCap, "degree_cap_reached", e.what(), {{"degree", e.degree()}, {"cap", e.cap()}}}, json, out, err);
    return kDegreeCap;
  } catch (const InvariantViolation& e) {
    report({kInvariantViolation, "invariant_violation", e.what()}, json, out, err);
    return kInvariantViolation;
  } catch (const VerificationFailed& e) {
    report({kInvariantViolation, "verification_failed", e.what()}, json, out, err);
    return kInvariantViolation;
  } catch (const OracleTooLarge& e) {
    report({kInputError, "oracle_too_large", e.what()}, json, out, err);
    return kInputError;
  } catch (const std::invalid_argument& e) {
    report({kInputError, "invalid_input", e.what()}, json, out, err);
    return kInputError;
  } catch (const std::domain_error& e) {
    report({kInputError, "invalid_input", e.what()}, json, out, err);
    return kInputError;
  }
}

}  // namespace weylsb::cli
