#include "sigstack/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "sigstack/classification.hpp"
#include "sigstack/conjectures.hpp"
#include "sigstack/enumeration.hpp"
#include "sigstack/patterns.hpp"
#include "sigstack/permutation.hpp"
#include "sigstack/stack_machine.hpp"

namespace sigstack {

namespace {

constexpr std::size_t guard_n = 11;

enum class Format { plain, csv, json, bfile };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 0;
  Format format = Format::plain;
  bool unicode = false;

  Parallelism par() const { return Parallelism{threads}; }
};

void check_guard(std::size_t n, bool force) {
  if (n > guard_n && !force) throw UsageError("refusing: would enumerate > 11! permutations (use --force)");
}

Permutation parse_sigma(const std::string& text) {
  Permutation sigma = parse_permutation(text);
  if (sigma.size() < 2) throw UsageError("sigma must have length >= 2");
  return sigma;
}

void unsupported(Format f, const char* command) {
  static const std::map<Format, const char*> names{
      {Format::plain, "plain"}, {Format::csv, "csv"}, {Format::json, "json"}, {Format::bfile, "bfile"}};
  throw UsageError(std::string("format ") + names.at(f) + " is not available for " + command);
}

const char* verdict_text(Verdict v) {
  return v == Verdict::pass ? "PASS" : v == Verdict::fail ? "FAIL" : "FINDING";
}

// trace -------------------------------------------------------------------

struct TraceArgs {
  std::string sigma, pi;
  bool events = false;
};

int cmd_trace(const TraceArgs& a, const Globals& g, std::ostream& out) {
  const Permutation sigma = parse_sigma(a.sigma);
  const Permutation pi = parse_permutation(a.pi);
  const TracedOutput result = map_sigma_traced(sigma, pi);
  switch (g.format) {
    case Format::plain:
      out << (a.events ? format_trace_events(result.trace) : render_trace_table(sigma, pi, result.trace));
      out << "map_" << sigma.compact() << "(" << pi.compact() << ") = " << result.output.compact() << "\n";
      break;
    case Format::csv:
      out << "step,op,value\n";
      for (std::size_t i = 0; i < result.trace.size(); ++i)
        out << i + 1 << "," << (result.trace[i].op == StackOp::push ? "push" : "pop") << ","
            << result.trace[i].value << "\n";
      break;
    case Format::json:
      out << nlohmann::json{{"sigma", sigma.to_string()},
                            {"input", pi.to_string()},
                            {"trace", trace_to_json(result.trace)},
                            {"output", result.output.to_string()}}
                 .dump()
          << "\n";
      break;
    case Format::bfile:
      unsupported(g.format, "trace");
  }
  return exit_ok;
}

// count -------------------------------------------------------------------

struct CountArgs {
  std::string what;
  std::string sigma;
  std::size_t max_n = 0;
  std::string method;
  bool force = false;
};

int cmd_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  if (a.max_n == 0) throw UsageError("--max-n must be at least 1");
  std::vector<SequenceRow> rows;
  if (a.what == "xi") {
    if (!a.sigma.empty()) throw UsageError("xi takes no sigma");
    for (std::size_t n = 1; n <= a.max_n; ++n) {
      const bool brute = a.method == "brute" || (a.method.empty() && n <= 10);
      if (brute) check_guard(n, a.force);
      rows.push_back({n, brute ? count_xi_avoiders_brute(n) : count_xi_avoiders_formula(n)});
    }
  } else {
    if (a.sigma.empty()) throw UsageError(a.what + " requires --sigma");
    const Permutation sigma = parse_sigma(a.sigma);
    const bool formula = a.method == "formula";
    if (formula && (a.what != "sortable" || sigma != Permutation{1, 2, 3}))
      throw UsageError("--method formula is only available for sortable with sigma 123");
    if (!formula) check_guard(a.max_n, a.force);
    for (std::size_t n = 1; n <= a.max_n; ++n) {
      Count c = formula               ? count_sortable_123_formula(n)
                : a.what == "sortable" ? count_sortable(n, sigma, g.par())
                                       : count_sorted(n, sigma, g.par());
      rows.push_back({n, c});
    }
  }
  switch (g.format) {
    case Format::plain:
      out << emit_plain(rows);
      break;
    case Format::csv:
      out << emit_csv(rows);
      break;
    case Format::json:
      out << emit_json(rows);
      break;
    case Format::bfile:
      out << emit_bfile(rows);
      break;
  }
  return exit_ok;
}

// classify ----------------------------------------------------------------

int cmd_classify(std::size_t length, const Globals& g, std::ostream& out) {
  if (length < 3 || length > 6) throw UsageError("--length must be between 3 and 6");
  const auto rows = classify_all(length);
  switch (g.format) {
    case Format::plain:
      out << render_classification(rows, g.unicode);
      break;
    case Format::csv:
      out << "sigma,class,effective,sort_inside_xi,row\n";
      for (const auto& r : rows)
        out << r.sigma.compact() << "," << r.is_class << "," << r.is_effective << "," << r.sort_inside_xi << ","
            << static_cast<int>(r.label) << "\n";
      break;
    case Format::json:
      out << classification_to_json(rows).dump() << "\n";
      break;
    case Format::bfile:
      unsupported(g.format, "classify");
  }
  return exit_ok;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_sigma_len = 4;
  std::size_t max_n = 8;
  std::string convention = "strict";
};

MinimaConvention parse_convention(const std::string& text) {
  return text == "weak" ? MinimaConvention::weak : MinimaConvention::strict;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.max_sigma_len < 2) throw UsageError("--max-sigma-len must be at least 2");
  check_guard(a.max_n, false);
  VerificationReport report;
  if (a.suite == "all" || a.suite == "theorems") report.append(verify_theorems(a.max_sigma_len, a.max_n, g.par()));
  if (a.suite == "all" || a.suite == "tables") report.append(verify_tables(a.max_n, g.par()));
  if (a.suite == "all" || a.suite == "conjectures")
    report.append(verify_conjectures(a.max_n, a.max_n, ExploreOptions{parse_convention(a.convention), g.par()}));

  switch (g.format) {
    case Format::plain:
      out << report.render();
      out << "# " << report.count(Verdict::pass) << " PASS, " << report.count(Verdict::fail) << " FAIL, "
          << report.count(Verdict::finding) << " FINDING\n";
      break;
    case Format::csv:
      out << "id,sigma,n,verdict\n";
      for (const auto& l : report.lines)
        out << l.id << "," << l.sigma << "," << l.n << "," << verdict_text(l.verdict) << "\n";
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& l : report.lines)
        arr.push_back({{"id", l.id}, {"sigma", l.sigma}, {"n", l.n}, {"verdict", verdict_text(l.verdict)},
                       {"detail", l.detail}});
      out << arr.dump() << "\n";
      break;
    }
    case Format::bfile:
      unsupported(g.format, "verify");
  }
  return report.all_passed() ? exit_ok : exit_verification_failed;
}

// fertility ---------------------------------------------------------------

struct FertilityArgs {
  std::string sigma;
  std::string gamma;
  std::size_t n = 0;
  bool force = false;
};

int cmd_fertility(const FertilityArgs& a, bool has_gamma, bool has_n, const Globals& g, std::ostream& out) {
  if (has_gamma == has_n) throw UsageError("give exactly one of --gamma and --n");
  const Permutation sigma = parse_sigma(a.sigma);
  if (has_gamma) {
    const Permutation gamma = parse_permutation(a.gamma);
    check_guard(gamma.size(), a.force);
    const Count f = fertility(sigma, gamma, g.par());
    switch (g.format) {
      case Format::plain:
        out << f.str() << "\n";
        break;
      case Format::csv:
        out << "gamma,count\n" << gamma.to_string() << "," << f.str() << "\n";
        break;
      case Format::json:
        out << nlohmann::json{{"sigma", sigma.to_string()}, {"gamma", gamma.to_string()},
                              {"fertility", count_to_json(f)}}
                   .dump()
            << "\n";
        break;
      case Format::bfile:
        unsupported(g.format, "fertility");
    }
    return exit_ok;
  }
  check_guard(a.n, a.force);
  const SortedProfile profile = sorted_profile(a.n, sigma, g.par());
  switch (g.format) {
    case Format::plain:
      for (const auto& [gamma, c] : profile.entries) out << gamma.to_string() << ": " << c.str() << "\n";
      out << "# " << profile.entries.size() << " sorted permutations, total " << profile.total().str() << "\n";
      break;
    case Format::csv:
      out << "gamma,count\n";
      for (const auto& [gamma, c] : profile.entries) out << gamma.to_string() << "," << c.str() << "\n";
      break;
    case Format::json:
      out << profile_to_json(profile).dump() << "\n";
      break;
    case Format::bfile:
      unsupported(g.format, "fertility");
  }
  return exit_ok;
}

// explore -----------------------------------------------------------------

int cmd_explore(std::size_t max_n, const std::string& convention, const Globals& g, std::ostream& out) {
  check_guard(max_n, false);
  const ExploreOptions opt{parse_convention(convention), g.par()};
  switch (g.format) {
    case Format::plain:
      out << render_exploration(max_n, opt);
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (std::size_t n = 1; n <= max_n; ++n) {
        nlohmann::json entry{{"n", n}};
        for (Family f : {Family::sort312, Family::fishburn3412, Family::ascent201}) {
          auto pairs = nlohmann::json::array();
          for (const auto& [p, c] : joint_distribution(f, n, opt).counts)
            pairs.push_back({p.first, p.second, count_to_json(c)});
          entry[std::string(to_string(f))] = pairs;
        }
        arr.push_back(entry);
      }
      out << arr.dump() << "\n";
      break;
    }
    default:
      unsupported(g.format, "explore");
  }
  return exit_ok;
}

// contains ----------------------------------------------------------------

int cmd_contains(const std::string& host_text, const std::string& pattern_text, const Globals& g,
                 std::ostream& out) {
  const Permutation host = parse_permutation(host_text);
  const bool found = pattern_text.find('|') != std::string::npos
                         ? contains_bivincular(host, parse_bivincular(pattern_text))
                         : contains(host, parse_permutation(pattern_text));
  if (g.format == Format::json)
    out << nlohmann::json{{"contains", found}}.dump() << "\n";
  else
    out << (found ? "yes" : "no") << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool unicode) {
  CLI::App app{"Exhaustive experiments with pattern-avoiding stack sorting machines", "sigstack"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.unicode = unicode;
  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}, {"bfile", Format::bfile}};
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format: plain, csv, json or bfile")
      ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}).description(""))
      ->type_name("FORMAT")
      ->each([&](const std::string& name) { g.format = formats.at(name); });

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Run the sigma-stack step by step");
  trace_cmd->add_option("sigma", trace.sigma, "Forbidden pattern")->required();
  trace_cmd->add_option("pi", trace.pi, "Input permutation")->required();
  trace_cmd->add_flag("--events", trace.events, "List push/pop events instead of the table");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Sequence of counts for n = 1..max-n");
  count_cmd->add_option("what", count.what, "sortable, sorted or xi")
      ->required()
      ->check(CLI::IsMember({"sortable", "sorted", "xi"}));
  count_cmd->add_option("--sigma", count.sigma, "Forbidden pattern");
  count_cmd->add_option("--max-n", count.max_n, "Largest n")->required();
  count_cmd->add_option("--method", count.method, "brute or formula")->check(CLI::IsMember({"brute", "formula"}));
  count_cmd->add_flag("--force", count.force, "Allow n > 11");

  std::size_t classify_length = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Cls/Eff/xi table for every sigma of a length");
  classify_cmd->add_option("--length", classify_length, "Length of sigma (3..6)")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force checks with PASS/FAIL lines");
  verify_cmd->add_option("suite", verify.suite, "all, theorems, tables or conjectures")
      ->check(CLI::IsMember({"all", "theorems", "tables", "conjectures"}));
  verify_cmd->add_option("--max-sigma-len", verify.max_sigma_len, "Largest sigma length");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest input length");
  verify_cmd->add_option("--convention", verify.convention, "rl_min convention on ascent sequences")
      ->check(CLI::IsMember({"strict", "weak"}));

  FertilityArgs fert;
  auto* fert_cmd = app.add_subcommand("fertility", "Preimage count of gamma, or the sorted profile of size n");
  fert_cmd->add_option("sigma", fert.sigma, "Forbidden pattern")->required();
  auto* gamma_opt = fert_cmd->add_option("--gamma", fert.gamma, "Target permutation");
  auto* n_opt = fert_cmd->add_option("--n", fert.n, "Profile size");
  fert_cmd->add_flag("--force", fert.force, "Allow n > 11");

  std::size_t explore_n = 7;
  std::string explore_convention = "strict";
  auto* explore_cmd = app.add_subcommand("explore", "Joint statistic distributions on the three families");
  explore_cmd->add_option("--max-n", explore_n, "Largest n");
  explore_cmd->add_option("--convention", explore_convention, "rl_min convention on ascent sequences")
      ->check(CLI::IsMember({"strict", "weak"}));

  std::string host, pattern;
  auto* contains_cmd = app.add_subcommand("contains", "Classical or bivincular (\"132|0,2|\") containment");
  contains_cmd->add_option("host", host, "Host permutation")->required();
  contains_cmd->add_option("pattern", pattern, "Pattern")->required();

  std::vector<std::string> argv_storage{"sigstack"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*trace_cmd) return cmd_trace(trace, g, out);
    if (*count_cmd) return cmd_count(count, g, out);
    if (*classify_cmd) return cmd_classify(classify_length, g, out);
    if (*verify_cmd) return cmd_verify(verify, g, out);
    if (*fert_cmd) return cmd_fertility(fert, gamma_opt->count() > 0, n_opt->count() > 0, g, out);
    if (*explore_cmd) return cmd_explore(explore_n, explore_convention, g, out);
    if (*contains_cmd) return cmd_contains(host, pattern, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace sigstack
