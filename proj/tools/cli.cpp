#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ins/convexity.hpp"
#include "ins/dsl/evaluator.hpp"
#include "ins/dsl/parser.hpp"
#include "ins/dsl/set_file.hpp"
#include "ins/errors.hpp"
#include "ins/families.hpp"
#include "ins/laws.hpp"
#include "json.hpp"

namespace ins::cli {

namespace {

enum class Format { kText, kJson };

struct Config {
  std::string sets_path;
  std::string expr;
  std::string law;
  bool all = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = -1.0;  // per-command default when unset
  Format format = Format::kText;
  int precision = dsl::kDefaultPrecision;
  std::string family;
  std::string intersect;
  std::string box = "-3:3";
  std::size_t lambda_grid = 11;
  bool strict = false;
};

/// Raised for problems that map to the usage exit status.
struct UsageError {
  std::string message;
};

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::Environment load_sets(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return dsl::parse_sets(text);
  } catch (const dsl::SourceError& e) {
    throw UsageError{path + ":" + e.what()};
  }
}

int cmd_eval(const Config& cfg, std::ostream& out, std::ostream& err) {
  const dsl::Environment env = load_sets(cfg.sets_path);
  dsl::Value result;
  try {
    result = dsl::evaluate(dsl::parse_expr(cfg.expr), env);
  } catch (const dsl::SourceError& e) {
    err << "ins: error: expr:" << e.what() << "\n";
    return e.is_syntax_error() ? kExitUsage : kExitFailure;
  }
  if (const bool* b = std::get_if<bool>(&result)) {
    if (cfg.format == Format::kJson)
      out << nlohmann::json{{"result", *b}}.dump() << "\n";
    else
      out << (*b ? "true" : "false") << "\n";
    return kExitOk;
  }
  std::visit(
      [&](const auto& set) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(set)>, bool>) {
          if (cfg.format == Format::kJson)
            out << dsl::to_json("result", set, cfg.precision).dump() << "\n";
          else
            out << dsl::format_set("result", set, cfg.precision);
        }
      },
      result);
  return kExitOk;
}

nlohmann::json value_json(const NeutrosophicValue& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const UnitInterval& c : {v.t, v.i, v.f}) j.push_back({c.lo(), c.hi()});
  return j;
}

nlohmann::json counterexample_json(const Counterexample& c) {
  nlohmann::json j = {{"trial", c.trial}, {"check", c.check}, {"label", c.label}, {"note", c.note}};
  j["lhs"] = c.lhs ? value_json(*c.lhs) : nlohmann::json(nullptr);
  j["rhs"] = c.rhs ? value_json(*c.rhs) : nlohmann::json(nullptr);
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, v] : c.operands) ops[name] = value_json(v);
  j["operands"] = ops;
  return j;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  LawOptions options;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.tol = cfg.tol < 0 ? 1e-12 : cfg.tol;
  if (!cfg.sets_path.empty()) {
    const dsl::Environment env = load_sets(cfg.sets_path);
    for (const auto& [name, set] : env.entries()) {
      options.fixtures.push_back(set);
      const auto& labels = set.labels();
      if (!set.empty_universe() &&
          std::find(options.universes.begin(), options.universes.end(), labels) == options.universes.end())
        options.universes.push_back(labels);
    }
  }

  std::vector<LawResult> results;
  try {
    if (cfg.all)
      results = check_all(options);
    else
      results.push_back(check_law(cfg.law, options));
  } catch (const UnknownLaw& e) {
    std::string known;
    for (const auto& l : law_catalog()) known += (known.empty() ? "" : ", ") + std::string(l.name);
    throw UsageError{std::string(e.what()) + " (known laws: " + known + ")"};
  }

  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;
  if (cfg.format == Format::kJson) {
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json entry = {{"name", r.name}, {"passed", r.passed}, {"trials", r.trials},
                              {"checks", r.checks}, {"counterexample", nullptr}};
      if (r.counterexample) entry["counterexample"] = counterexample_json(*r.counterexample);
      laws.push_back(std::move(entry));
    }
    out << nlohmann::json{{"passed", all_passed}, {"laws", laws}}.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << render(r);
      passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << results.size() << " laws passed\n";
  }
  return all_passed ? kExitOk : kExitFailure;
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + number(p[i]);
  return s + ")";
}

int cmd_convex(const Config& cfg, std::ostream& out) {
  Box box = [&] {
    try {
      return Box::parse(cfg.box);
    } catch (const InvalidDomain& e) {
      throw UsageError{e.what()};
    }
  }();
  auto build = [&](const std::string& spec) {
    try {
      return make_family(parse_family_spec(spec), box.dimension());
    } catch (const UnknownFamily& e) {
      throw UsageError{e.what()};
    }
  };
  FunctionalINS set = build(cfg.family);
  std::string label = cfg.family;
  if (!cfg.intersect.empty()) {
    set = intersect_functional(set, build(cfg.intersect));
    label += " & " + cfg.intersect;
  }
  CheckOptions options;
  options.trials = cfg.trials;
  options.lambda_grid = cfg.lambda_grid;
  options.seed = cfg.seed;
  options.tol = cfg.tol < 0 ? 1e-9 : cfg.tol;
  ConvexityReport report;
  try {
    report = cfg.strict ? check_strongly_convex(set, box, options) : check_convex(set, box, options);
  } catch (const InvalidDomain& e) {
    throw UsageError{e.what()};
  } catch (const std::invalid_argument& e) {
    throw UsageError{e.what()};
  }

  const std::string mode = cfg.strict ? "strongly-convex" : "convex";
  if (cfg.format == Format::kJson) {
    nlohmann::json j = {{"family", label},
                        {"check", mode},
                        {"verdict", std::string(verdict_name(report.verdict))},
                        {"samples_checked", report.samples_checked},
                        {"witness", nullptr}};
    if (report.witness) {
      const Witness& w = *report.witness;
      j["witness"] = {{"x1", w.x1},
                      {"x2", w.x2},
                      {"lambda", w.lambda},
                      {"component", std::string(endpoint_name(w.component))},
                      {"lhs", w.lhs},
                      {"rhs", w.rhs}};
    }
    out << j.dump() << "\n";
  } else {
    out << "family: " << label << "\n";
    out << "check: " << mode << "\n";
    out << "verdict: " << verdict_name(report.verdict) << "\n";
    out << "samples: " << report.samples_checked << "\n";
    if (report.witness) {
      const Witness& w = *report.witness;
      out << "witness: x1=" << point_text(w.x1) << " x2=" << point_text(w.x2)
          << " lambda=" << number(w.lambda) << " component=" << endpoint_name(w.component)
          << " lhs=" << number(w.lhs) << " rhs=" << number(w.rhs) << "\n";
    }
  }
  return report.verdict == Verdict::kViolated ? kExitFailure : kExitOk;
}

/// "--box -2:2" would be read as a short option; glue such values on.
std::vector<std::string> glue_negative_values(std::span<const std::string> args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--box" || args[i] == "--seed" || args[i] == "--tol";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> raw_args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Interval neutrosophic set algebra"};
  app.name("ins");
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};

  auto* eval = app.add_subcommand("eval", "Evaluate an expression over a set file");
  eval->add_option("--sets", cfg.sets_path, "Set file")->required();
  eval->add_option("--expr", cfg.expr, "Expression")->required();
  eval->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  eval->add_option("--precision", cfg.precision, "Significant digits (1-17)")
      ->check(CLI::Range(1, 17));

  auto* check = app.add_subcommand("check", "Run algebraic law checks");
  auto* law_opt = check->add_option("--law", cfg.law, "Law name");
  auto* all_opt = check->add_flag("--all", cfg.all, "Run every law");
  law_opt->excludes(all_opt);
  check->add_option("--sets", cfg.sets_path, "Set file whose universes and sets are sampled");
  check->add_option("--trials", cfg.trials, "Trials per law")->check(CLI::PositiveNumber);
  check->add_option("--seed", cfg.seed, "Random seed");
  check->add_option("--tol", cfg.tol, "Tolerance for arithmetic laws")->check(CLI::NonNegativeNumber);
  check->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* convex = app.add_subcommand("convex", "Sampled convexity check of a built-in family");
  convex->add_option("--family", cfg.family, "Family spec, e.g. triangular(0,1)")->required();
  convex->add_option("--intersect", cfg.intersect, "Second family; checks the intersection");
  convex->add_option("--box", cfg.box, "Sampling box LO:HI[,LO:HI...]");
  convex->add_option("--trials", cfg.trials, "Point pairs")->check(CLI::PositiveNumber);
  convex->add_option("--lambda-grid", cfg.lambda_grid, "Lambda grid size")->check(CLI::Range(2, 1 << 20));
  convex->add_option("--seed", cfg.seed, "Random seed");
  convex->add_option("--tol", cfg.tol, "Comparison tolerance")->check(CLI::NonNegativeNumber);
  convex->add_flag("--strict", cfg.strict, "Check strong convexity");
  convex->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::vector<std::string> args = glue_negative_values(raw_args.subspan(raw_args.empty() ? 0 : 1));
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (check->parsed() && !cfg.all && cfg.law.empty())
      throw CLI::ValidationError("check", "one of --law or --all is required");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ins: error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, out, err);
    if (check->parsed()) return cmd_check(cfg, out);
    return cmd_convex(cfg, out);
  } catch (const UsageError& e) {
    err << "ins: error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "ins: error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ins::cli
