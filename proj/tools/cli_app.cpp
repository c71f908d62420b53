#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "permstat/avoiders.hpp"
#include "permstat/bijections.hpp"
#include "permstat/pattern.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/stats.hpp"
#include "permstat/sweep.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

EnumMethod resolve_method(const std::string& name, const Word& sigma) {
  if (name == "auto") return default_method(sigma);
  if (name == "filter") return EnumMethod::filter;
  if (name == "structured") return EnumMethod::structured;
  throw std::invalid_argument("unknown method '" + name + "'");
}

int cmd_stats(const std::string& word_text, const std::string& names_csv,
              std::ostream& out) {
  const Word w = Word::parse(word_text);
  // resolve every statistic before printing anything
  std::vector<std::pair<std::string, std::int64_t>> values;
  for (const std::string& name : split_names(names_csv))
    values.emplace_back(name, statistic_by_name(name)(w));
  for (const auto& [name, value] : values)
    out << name << "=" << value << "\n";
  return kExitOk;
}

int cmd_count(const std::string& word_text, const std::string& pattern_text,
              std::ostream& out) {
  const Word w = Word::parse(word_text);
  const VincularPattern p = VincularPattern::parse(pattern_text);
  out << count_occurrences(w, p) << "\n";
  return kExitOk;
}

int cmd_avoiders(const std::string& class_text, const std::string& method_name,
                 bool count_only, int jobs, std::ostream& out) {
  const AvoiderClass c = AvoiderClass::parse(class_text);
  const EnumMethod method = resolve_method(method_name, c.sigma);
  if (count_only) {
    out << class_count(c, method, jobs) << "\n";
    return kExitOk;
  }
  for_each_avoider(c, method, [&](const Word& w) {
    out << w.str() << "\n";
    return true;
  });
  return kExitOk;
}

int cmd_map(const std::string& fn, const std::string& input_text,
            const std::string& target_text, bool force, std::ostream& out) {
  const Word input = Word::parse(input_text);
  Word result;
  if (fn == "alpha" || fn == "beta") {
    if (!target_text.empty())
      throw std::invalid_argument("--target-set applies only to phi/varphi");
    result = (fn == "alpha") ? alpha(input, !force) : beta(input, !force);
  } else if (fn == "phi" || fn == "varphi") {
    if (target_text.empty())
      throw std::invalid_argument(fn + " requires --target-set");
    const GroundSet target = GroundSet::parse(target_text);
    result = (fn == "phi") ? phi(input, target) : varphi(input, target);
  } else {
    throw std::invalid_argument("unknown map '" + fn + "'");
  }
  out << result.str() << "\n";
  return kExitOk;
}

int cmd_table(const std::string& class_text, const std::string& qstat,
              const std::string& tstat, const std::string& format,
              const std::string& method_name, int jobs, std::ostream& out) {
  const AvoiderClass c = AvoiderClass::parse(class_text);
  const EnumMethod method = resolve_method(method_name, c.sigma);
  const BivariatePolynomial poly =
      class_distribution(c, method, statistic_by_name(qstat),
                         statistic_by_name(tstat), jobs);
  if (format == "text") {
    out << poly.str() << "\n";
  } else if (format == "json") {
    out << poly.to_json().dump() << "\n";
  } else if (format == "csv") {
    out << poly.csv();
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite_name, std::optional<int> n_flag,
               int jobs, bool force, const std::string& format,
               std::ostream& out) {
  const SuiteInfo* info = find_suite(suite_name);
  if (info == nullptr)
    throw std::invalid_argument("unknown suite '" + suite_name + "'");

  // precedence: --n flag, then PERMSTAT_NMAX, then the suite default
  int n_max = info->default_n_max;
  if (n_flag) {
    n_max = *n_flag;
  } else if (const char* env = std::getenv("PERMSTAT_NMAX"); env != nullptr) {
    try {
      size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used != std::string(env).size() || value < 0)
        throw std::invalid_argument("");
      n_max = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("PERMSTAT_NMAX is not a valid n");
    }
  }
  if (n_max > info->default_n_max && !force)
    throw std::invalid_argument(
        "n=" + std::to_string(n_max) + " exceeds the feasibility cap " +
        std::to_string(info->default_n_max) + " of suite '" + info->name +
        "'; pass --force to run anyway");

  const VerificationReport report = run_suite(suite_name, n_max, jobs);
  if (format == "json") {
    out << report.to_json().dump() << "\n";
  } else if (format == "text") {
    out << report.text();
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return report.pass ? kExitOk : kExitVerifyFailed;
}

std::string suite_summary() {
  std::string out = "suites:";
  for (const auto& info : suites())
    out += "\n  " + info.name + " (n <= " + std::to_string(info.default_n_max) +
           "): " + info.description;
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"permutation statistics, vincular patterns, pattern-avoiding "
               "classes and their verification suites"};
  app.require_subcommand(1);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "evaluate statistics of a word");
  std::string stats_word;
  std::string stats_names = "maj,stat,mak,inv,des,ides,F,adj";
  stats_cmd->add_option("word", stats_word, "the word, e.g. 4753162 or 12,3,7")
      ->required();
  stats_cmd->add_option("--stats", stats_names,
                        "comma-separated statistic names");

  // count
  auto* count_cmd =
      app.add_subcommand("count", "count occurrences of a vincular pattern");
  std::string count_word, count_pattern;
  count_cmd->add_option("word", count_word, "the host word")->required();
  count_cmd->add_option("pattern", count_pattern, "the pattern, e.g. 2-31")
      ->required();

  // avoiders
  auto* avoiders_cmd =
      app.add_subcommand("avoiders", "list or count a class S(n,sigma)");
  std::string avoiders_class, avoiders_method = "auto";
  bool avoiders_count = false;
  int avoiders_jobs = 1;
  avoiders_cmd->add_option("class", avoiders_class, "e.g. S(8,213)")
      ->required();
  avoiders_cmd->add_option("--method", avoiders_method,
                           "auto|filter|structured");
  avoiders_cmd->add_flag("--count", avoiders_count, "print the count only");
  avoiders_cmd->add_option("--jobs", avoiders_jobs,
                           "worker threads for --count (0 = hardware)");

  // map
  auto* map_cmd = app.add_subcommand("map", "apply alpha, beta, phi or varphi");
  std::string map_fn, map_input, map_target;
  bool map_force = false;
  map_cmd->add_option("--fn", map_fn, "alpha|beta|phi|varphi")->required();
  map_cmd->add_option("--input", map_input, "the input word")->required();
  map_cmd->add_option("--target-set", map_target,
                      "target ground set for phi/varphi, e.g. 1,3,5,7,9");
  map_cmd->add_flag("--force", map_force,
                    "skip the avoidance validation of alpha/beta");

  // table
  auto* table_cmd = app.add_subcommand(
      "table", "distribution polynomial of a pair of statistics over a class");
  std::string table_class, table_qstat, table_tstat, table_format = "text";
  std::string table_method = "auto";
  int table_jobs = 1;
  table_cmd->add_option("class", table_class, "e.g. S(3,213)")->required();
  table_cmd->add_option("qstat", table_qstat, "statistic on the q exponent")
      ->required();
  table_cmd->add_option("tstat", table_tstat, "statistic on the t exponent")
      ->required();
  table_cmd->add_option("--format", table_format, "text|json|csv");
  table_cmd->add_option("--method", table_method, "auto|filter|structured");
  table_cmd->add_option("--jobs", table_jobs,
                        "worker threads (0 = hardware)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite\n" +
                                       suite_summary());
  std::string verify_suite, verify_format = "text";
  int verify_n = -1;
  int verify_jobs = 1;
  bool verify_force = false;
  verify_cmd->add_option("suite", verify_suite, "suite name")->required();
  verify_cmd
      ->add_option("--n", verify_n,
                   "largest n to check (default: the suite cap, or "
                   "PERMSTAT_NMAX when set)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--jobs", verify_jobs,
                         "worker threads (0 = hardware)");
  verify_cmd->add_flag("--force", verify_force,
                       "allow n beyond the suite feasibility cap");
  verify_cmd->add_option("--format", verify_format, "text|json");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) return cmd_stats(stats_word, stats_names, out);
    if (count_cmd->parsed()) return cmd_count(count_word, count_pattern, out);
    if (avoiders_cmd->parsed())
      return cmd_avoiders(avoiders_class, avoiders_method, avoiders_count,
                          avoiders_jobs, out);
    if (map_cmd->parsed())
      return cmd_map(map_fn, map_input, map_target, map_force, out);
    if (table_cmd->parsed())
      return cmd_table(table_class, table_qstat, table_tstat, table_format,
                       table_method, table_jobs, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_suite,
                        verify_n >= 0 ? std::optional<int>(verify_n)
                                      : std::nullopt,
                        verify_jobs, verify_force, verify_format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace permstat::cli
