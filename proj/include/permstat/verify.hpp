#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "permstat/word.hpp"

namespace permstat {

/// First counterexample of a verification suite.
struct Counterexample {
  int n = 0;
  std::optional<Word> word;  // the failing permutation, for pointwise suites
  std::string expected;
  std::string actual;
  std::string detail;
};

struct SuiteRun {
  int n = 0;
  bool pass = false;
};

/// Outcome of one suite over a range of n.  Apart from the wall-clock
/// duration, the report is deterministic for fixed inputs.
struct VerificationReport {
  std::string suite;
  int n_min = 0;
  int n_max = 0;
  std::vector<SuiteRun> per_n;
  std::optional<Counterexample> counterexample;  // first failure overall
  bool pass = false;
  double seconds = 0.0;

  nlohmann::json to_json() const;
  std::string text() const;
};

struct SuiteInfo {
  std::string name;
  int n_min = 0;
  /// Default and enforced feasibility cap for the CLI (override with
  /// --force); the library itself accepts any n_max.
  int default_n_max = 0;
  std::string description;
};

/// The named suites:
///   theorem-main  pointwise transfer of (F, maj, stat, des, ides) under
///                 alpha over S_n(213), plus both round trips
///   conj-1.2      sum q^maj over S_n(213) = sum q^stat over S_n(231), and
///                 the same with the classes swapped
///   conj-1.3      maj over S_n(132) ~ stat over S_n(213); maj over
///                 S_n(312) ~ stat over S_n(231)
///   conj-1.4      mak over S_n(132)/S_n(213)/S_n(231)/S_n(312) against
///                 stat over S_n(213)/S_n(231)/S_n(231)/S_n(213)
///   burstein      maj + stat = (n+1) des - (F - 1) over all of S_n
///   maj-bs        the four-pattern form of maj equals the descent-sum maj
///                 over all of S_n
///   recurrences   both M_n(q,t) recurrences against direct enumeration,
///                 plus coefficient mass = catalan(n)
///   thm-1.1       (adj, des, F, maj, stat) ~ (adj, des, F, stat, maj)
///                 over all of S_n
const std::vector<SuiteInfo>& suites();

/// nullptr when the name is unknown.
const SuiteInfo* find_suite(std::string_view name);

/// Runs one suite for every n from the suite's n_min through n_max.
/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view name, int n_max, int jobs);

}  // namespace permstat
