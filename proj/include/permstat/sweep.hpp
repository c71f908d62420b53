#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/avoiders.hpp"
#include "permstat/pattern.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/word.hpp"

namespace permstat {

using StatList = std::vector<StatFn>;
using TupleKey = std::vector<std::int64_t>;
using TupleDistribution = std::map<TupleKey, std::int64_t>;

/// First failing word of a pointwise scan, in lexicographic order, with a
/// human-readable description of the violation.
struct ScanFailure {
  Word word;
  std::string detail;
};

/// Pointwise property: nullopt on pass, violation message on failure.
using PointwiseCheck = std::function<std::optional<std::string>(const Word&)>;

/// Straightforward single-loop reference implementations.  The OpenMP
/// kernels below must agree with these bit-for-bit; the test suite and the
/// benchmark tool hold them to that.
namespace serial {

BivariatePolynomial class_distribution(const AvoiderClass& c, EnumMethod m,
                                       StatFn qstat, StatFn tstat);
BivariatePolynomial sn_distribution(int n, StatFn qstat, StatFn tstat);

TupleDistribution class_tuple_distribution(const AvoiderClass& c, EnumMethod m,
                                           const StatList& stats);
TupleDistribution sn_tuple_distribution(int n, const StatList& stats);

std::optional<ScanFailure> scan_class(const AvoiderClass& c, EnumMethod m,
                                      const PointwiseCheck& check);
std::optional<ScanFailure> scan_sn(int n, const PointwiseCheck& check);

std::int64_t class_count(const AvoiderClass& c, EnumMethod m);

}  // namespace serial

/// OpenMP kernels.  Enumeration is partitioned by first letter; each
/// partition aggregates locally and the partials are merged in first-letter
/// order, so results (including the reported first counterexample) are
/// identical to the serial reference for every job count.  jobs <= 0 means
/// the OpenMP default thread count.
BivariatePolynomial class_distribution(const AvoiderClass& c, EnumMethod m,
                                       StatFn qstat, StatFn tstat, int jobs);
BivariatePolynomial sn_distribution(int n, StatFn qstat, StatFn tstat,
                                    int jobs);

TupleDistribution class_tuple_distribution(const AvoiderClass& c, EnumMethod m,
                                           const StatList& stats, int jobs);
TupleDistribution sn_tuple_distribution(int n, const StatList& stats,
                                        int jobs);

std::optional<ScanFailure> scan_class(const AvoiderClass& c, EnumMethod m,
                                      const PointwiseCheck& check, int jobs);
std::optional<ScanFailure> scan_sn(int n, const PointwiseCheck& check,
                                   int jobs);

std::int64_t class_count(const AvoiderClass& c, EnumMethod m, int jobs);

}  // namespace permstat
