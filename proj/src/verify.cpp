#include "permstat/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "permstat/avoiders.hpp"
#include "permstat/bijections.hpp"
#include "permstat/pattern.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/stats.hpp"
#include "permstat/sweep.hpp"

namespace permstat {

namespace {

std::int64_t zero_stat(const Word&) { return 0; }

const Word& pat(std::string_view digits) {
  static const Word p213 = Word::parse("213");
  static const Word p231 = Word::parse("231");
  static const Word p132 = Word::parse("132");
  static const Word p312 = Word::parse("312");
  if (digits == "213") return p213;
  if (digits == "231") return p231;
  if (digits == "132") return p132;
  return p312;
}

BivariatePolynomial univariate(const char* sigma, int n, const char* stat,
                               int jobs) {
  const AvoiderClass c(n, pat(sigma));
  return class_distribution(c, default_method(c.sigma), statistic_by_name(stat),
                            &zero_stat, jobs);
}

std::optional<Counterexample> poly_identity(int n, const std::string& what,
                                            const BivariatePolynomial& lhs,
                                            const BivariatePolynomial& rhs) {
  if (lhs == rhs) return std::nullopt;
  Counterexample ce;
  ce.n = n;
  ce.detail = what;
  ce.expected = lhs.str();
  ce.actual = rhs.str();
  return ce;
}

std::optional<Counterexample> from_scan(int n,
                                        std::optional<ScanFailure> failure,
                                        const std::string& what) {
  if (!failure) return std::nullopt;
  Counterexample ce;
  ce.n = n;
  ce.word = failure->word;
  ce.detail = what + ": " + failure->detail;
  return ce;
}

std::optional<Counterexample> check_theorem_main(int n, int jobs) {
  const AvoiderClass c213(n, pat("213"));
  const AvoiderClass c231(n, pat("231"));
  auto forward = scan_class(
      c213, EnumMethod::structured,
      [](const Word& w) -> std::optional<std::string> {
        const Word image = alpha(w, false);
        if (contains_pattern(image, pat("231")))
          return "alpha image " + image.str() + " contains 231";
        const StatProfile before = stat_profile(w);
        const StatProfile after = stat_profile(image);
        const StatProfile expected{before.first, before.stat, before.maj,
                                   before.des, before.ides};
        if (after != expected)
          return "alpha(" + w.str() + ") = " + image.str() + " has profile " +
                 after.str() + ", expected the maj<->stat swap " +
                 expected.str();
        if (beta(image, false) != w)
          return "beta(alpha(" + w.str() + ")) != identity";
        return std::nullopt;
      },
      jobs);
  if (forward) return from_scan(n, std::move(forward), "over S_n(213)");
  auto backward = scan_class(
      c231, EnumMethod::structured,
      [](const Word& w) -> std::optional<std::string> {
        const Word image = beta(w, false);
        if (contains_pattern(image, pat("213")))
          return "beta image " + image.str() + " contains 213";
        if (alpha(image, false) != w)
          return "alpha(beta(" + w.str() + ")) != identity";
        return std::nullopt;
      },
      jobs);
  return from_scan(n, std::move(backward), "over S_n(231)");
}

std::optional<Counterexample> check_conj_12(int n, int jobs) {
  auto ce = poly_identity(n, "sum q^maj over S_n(213) vs sum q^stat over S_n(231)",
                          univariate("213", n, "maj", jobs),
                          univariate("231", n, "stat", jobs));
  if (ce) return ce;
  return poly_identity(n, "sum q^maj over S_n(231) vs sum q^stat over S_n(213)",
                       univariate("231", n, "maj", jobs),
                       univariate("213", n, "stat", jobs));
}

std::optional<Counterexample> check_conj_13(int n, int jobs) {
  auto ce = poly_identity(n, "maj over S_n(132) vs stat over S_n(213)",
                          univariate("132", n, "maj", jobs),
                          univariate("213", n, "stat", jobs));
  if (ce) return ce;
  return poly_identity(n, "maj over S_n(312) vs stat over S_n(231)",
                       univariate("312", n, "maj", jobs),
                       univariate("231", n, "stat", jobs));
}

std::optional<Counterexample> check_conj_14(int n, int jobs) {
  static const char* mak_class[] = {"132", "213", "231", "312"};
  static const char* stat_class[] = {"213", "231", "231", "213"};
  for (int i = 0; i < 4; ++i) {
    auto ce = poly_identity(
        n,
        std::string("mak over S_n(") + mak_class[i] + ") vs stat over S_n(" +
            stat_class[i] + ")",
        univariate(mak_class[i], n, "mak", jobs),
        univariate(stat_class[i], n, "stat", jobs));
    if (ce) return ce;
  }
  return std::nullopt;
}

std::optional<Counterexample> check_burstein(int n, int jobs) {
  auto failure = scan_sn(
      n,
      [n](const Word& w) -> std::optional<std::string> {
        const std::int64_t lhs = major_index(w) +
                                 composite_statistic(w, Composite::stat);
        const std::int64_t rhs =
            (n + 1) * descent_number(w) - (first_letter(w) - 1);
        if (lhs == rhs) return std::nullopt;
        return "maj+stat = " + std::to_string(lhs) +
               " but (n+1)des-(F-1) = " + std::to_string(rhs);
      },
      jobs);
  return from_scan(n, std::move(failure), "over S_n");
}

std::optional<Counterexample> check_maj_bs(int n, int jobs) {
  auto failure = scan_sn(
      n,
      [](const Word& w) -> std::optional<std::string> {
        const std::int64_t by_patterns =
            composite_statistic(w, Composite::maj_bs);
        const std::int64_t by_descents = major_index(w);
        if (by_patterns == by_descents) return std::nullopt;
        return "pattern form gives " + std::to_string(by_patterns) +
               ", descent sum gives " + std::to_string(by_descents);
      },
      jobs);
  return from_scan(n, std::move(failure), "over S_n");
}

std::optional<Counterexample> check_recurrences(int n, int jobs) {
  const BivariatePolynomial direct =
      class_distribution(AvoiderClass(n, pat("213")), EnumMethod::structured,
                         statistic_by_name("maj"), statistic_by_name("des"),
                         jobs);
  const BivariatePolynomial by_first_letter = mn_via_recurrence(n);
  const BivariatePolynomial by_minimum = mn_via_alternate(n);
  auto ce = poly_identity(n, "first-letter recurrence vs direct enumeration",
                          direct, by_first_letter);
  if (ce) return ce;
  ce = poly_identity(n, "minimum-position recurrence vs direct enumeration",
                     direct, by_minimum);
  if (ce) return ce;
  const std::int64_t mass = direct.value_at_one();
  if (mass != catalan(n)) {
    Counterexample bad;
    bad.n = n;
    bad.detail = "coefficient mass of M_n";
    bad.expected = std::to_string(catalan(n));
    bad.actual = std::to_string(mass);
    return bad;
  }
  return std::nullopt;
}

std::optional<Counterexample> check_thm_11(int n, int jobs) {
  const StatList lhs = {statistic_by_name("adj"), statistic_by_name("des"),
                        statistic_by_name("F"), statistic_by_name("maj"),
                        statistic_by_name("stat")};
  const StatList rhs = {statistic_by_name("adj"), statistic_by_name("des"),
                        statistic_by_name("F"), statistic_by_name("stat"),
                        statistic_by_name("maj")};
  const TupleDistribution a = sn_tuple_distribution(n, lhs, jobs);
  const TupleDistribution b = sn_tuple_distribution(n, rhs, jobs);
  if (a == b) return std::nullopt;
  Counterexample ce;
  ce.n = n;
  ce.detail =
      "(adj,des,F,maj,stat) and (adj,des,F,stat,maj) differ as multisets";
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != count) {
      std::string tuple = "(";
      for (size_t i = 0; i < key.size(); ++i)
        tuple += (i ? "," : "") + std::to_string(key[i]);
      tuple += ")";
      ce.expected = tuple + " x" + std::to_string(count);
      ce.actual =
          it == b.end() ? "absent" : tuple + " x" + std::to_string(it->second);
      break;
    }
  }
  return ce;
}

using SuiteCheck = std::optional<Counterexample> (*)(int, int);

struct SuiteEntry {
  SuiteInfo info;
  SuiteCheck check;
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {{"theorem-main", 1, 11,
        "alpha transports (F,maj,stat,des,ides) to (F,stat,maj,des,ides) "
        "pointwise over S_n(213); both round trips"},
       &check_theorem_main},
      {{"conj-1.2", 0, 11,
        "maj over S_n(213) ~ stat over S_n(231), and swapped"},
       &check_conj_12},
      {{"conj-1.3", 0, 11,
        "maj over S_n(132) ~ stat over S_n(213); maj over S_n(312) ~ stat "
        "over S_n(231)"},
       &check_conj_13},
      {{"conj-1.4", 0, 11,
        "mak over S_n(132)/S_n(213)/S_n(231)/S_n(312) ~ stat over the "
        "matching class"},
       &check_conj_14},
      {{"burstein", 1, 8, "maj + stat = (n+1) des - (F-1) over S_n"},
       &check_burstein},
      {{"maj-bs", 0, 8,
        "the four-pattern form of maj equals the descent sum over S_n"},
       &check_maj_bs},
      {{"recurrences", 0, 12,
        "both M_n(q,t) recurrences against direct enumeration, and "
        "coefficient mass = catalan(n)"},
       &check_recurrences},
      {{"thm-1.1", 1, 8,
        "(adj,des,F,maj,stat) ~ (adj,des,F,stat,maj) over S_n"},
       &check_thm_11},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& entry : suite_table()) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& entry : suite_table())
    if (entry.info.name == name) return &entry.info;
  return nullptr;
}

VerificationReport run_suite(std::string_view name, int n_max, int jobs) {
  const SuiteEntry* entry = nullptr;
  for (const auto& e : suite_table())
    if (e.info.name == name) entry = &e;
  if (entry == nullptr)
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");

  VerificationReport report;
  report.suite = entry->info.name;
  report.n_min = entry->info.n_min;
  report.n_max = n_max;
  report.pass = true;
  const auto start = std::chrono::steady_clock::now();
  for (int n = entry->info.n_min; n <= n_max; ++n) {
    std::optional<Counterexample> ce = entry->check(n, jobs);
    report.per_n.push_back({n, !ce.has_value()});
    if (ce) {
      report.pass = false;
      if (!report.counterexample) report.counterexample = std::move(ce);
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["n_min"] = n_min;
  j["n_max"] = n_max;
  j["pass"] = pass;
  j["seconds"] = seconds;
  j["per_n"] = nlohmann::json::array();
  for (const auto& run : per_n)
    j["per_n"].push_back({{"n", run.n}, {"pass", run.pass}});
  if (counterexample) {
    nlohmann::json ce;
    ce["n"] = counterexample->n;
    if (counterexample->word) ce["word"] = counterexample->word->str();
    if (!counterexample->expected.empty())
      ce["expected"] = counterexample->expected;
    if (!counterexample->actual.empty()) ce["actual"] = counterexample->actual;
    ce["detail"] = counterexample->detail;
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  for (const auto& run : per_n)
    out << "n=" << run.n << ": " << (run.pass ? "pass" : "FAIL") << "\n";
  if (counterexample) {
    out << "first counterexample (n=" << counterexample->n << "):\n";
    if (counterexample->word)
      out << "  word: " << counterexample->word->str() << "\n";
    if (!counterexample->expected.empty())
      out << "  expected: " << counterexample->expected << "\n";
    if (!counterexample->actual.empty())
      out << "  actual:   " << counterexample->actual << "\n";
    out << "  detail: " << counterexample->detail << "\n";
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", seconds);
  out << "result: " << (pass ? "PASS" : "FAIL") << " (" << buffer << "s)\n";
  return out.str();
}

}  // namespace permstat
