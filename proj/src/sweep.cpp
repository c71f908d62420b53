#include "permstat/sweep.hpp"

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permstat {

namespace {

void accumulate_poly(BivariatePolynomial& poly, const Word& w, StatFn qstat,
                     StatFn tstat) {
  poly.add_term(static_cast<int>(qstat(w)), static_cast<int>(tstat(w)), 1);
}

void accumulate_tuple(TupleDistribution& dist, const Word& w,
                      const StatList& stats) {
  TupleKey key;
  key.reserve(stats.size());
  for (StatFn fn : stats) key.push_back(fn(w));
  ++dist[std::move(key)];
}

// One enumeration partition: either a whole space (first = 0) or the slice
// with a fixed first letter.
bool walk(const AvoiderClass* c, EnumMethod m, int n, Letter first,
          const WordVisitor& visit) {
  if (c != nullptr) {
    return first == 0 ? for_each_avoider(*c, m, visit)
                      : for_each_avoider_first(*c, m, first, visit);
  }
  return first == 0 ? for_each_permutation(n, visit)
                    : for_each_permutation_first(n, first, visit);
}

// Runs `partition(k, partial[k])` for k = 1..n across OpenMP threads and
// merges the partials in k order, so the result matches a serial
// left-to-right pass exactly.  Exceptions are carried across the region.
template <typename Partial, typename Partition, typename Merge>
void parallel_partitions(int n, int jobs, Partition&& partition,
                         Merge&& merge) {
  std::vector<Partial> partials(static_cast<size_t>(n) + 1);
  std::exception_ptr error;
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int k = 1; k <= n; ++k) {
    try {
      partition(static_cast<Letter>(k), partials[k]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
#else
  (void)jobs;
  for (int k = 1; k <= n; ++k) {
    try {
      partition(static_cast<Letter>(k), partials[k]);
    } catch (...) {
      if (!error) error = std::current_exception();
    }
  }
#endif
  if (error) std::rethrow_exception(error);
  for (int k = 1; k <= n; ++k) merge(partials[k]);
}

BivariatePolynomial distribution_impl(const AvoiderClass* c, EnumMethod m,
                                      int n, StatFn qstat, StatFn tstat,
                                      int jobs) {
  BivariatePolynomial total;
  if (n == 0) {
    walk(c, m, n, 0, [&](const Word& w) {
      accumulate_poly(total, w, qstat, tstat);
      return true;
    });
    return total;
  }
  parallel_partitions<BivariatePolynomial>(
      n, jobs,
      [&](Letter k, BivariatePolynomial& local) {
        walk(c, m, n, k, [&](const Word& w) {
          accumulate_poly(local, w, qstat, tstat);
          return true;
        });
      },
      [&](BivariatePolynomial& part) { total += part; });
  return total;
}

TupleDistribution tuples_impl(const AvoiderClass* c, EnumMethod m, int n,
                              const StatList& stats, int jobs) {
  TupleDistribution total;
  if (n == 0) {
    walk(c, m, n, 0, [&](const Word& w) {
      accumulate_tuple(total, w, stats);
      return true;
    });
    return total;
  }
  parallel_partitions<TupleDistribution>(
      n, jobs,
      [&](Letter k, TupleDistribution& local) {
        walk(c, m, n, k, [&](const Word& w) {
          accumulate_tuple(local, w, stats);
          return true;
        });
      },
      [&](TupleDistribution& part) {
        for (auto& [key, count] : part) total[key] += count;
      });
  return total;
}

std::optional<ScanFailure> scan_impl(const AvoiderClass* c, EnumMethod m,
                                     int n, const PointwiseCheck& check,
                                     int jobs) {
  std::optional<ScanFailure> first_failure;
  const auto scan_one = [&check](const Word& w,
                                 std::optional<ScanFailure>& slot) {
    std::optional<std::string> message = check(w);
    if (!message) return true;
    slot = ScanFailure{w, std::move(*message)};
    return false;  // stop this partition at its first failure
  };
  if (n == 0) {
    walk(c, m, n, 0, [&](const Word& w) { return scan_one(w, first_failure); });
    return first_failure;
  }
  parallel_partitions<std::optional<ScanFailure>>(
      n, jobs,
      [&](Letter k, std::optional<ScanFailure>& local) {
        walk(c, m, n, k, [&](const Word& w) { return scan_one(w, local); });
      },
      [&](std::optional<ScanFailure>& part) {
        // partitions are visited in first-letter order, so the first
        // non-empty slot is the lexicographically first failure
        if (!first_failure && part) first_failure = std::move(part);
      });
  return first_failure;
}

std::int64_t count_impl(const AvoiderClass& c, EnumMethod m, int jobs) {
  std::int64_t total = 0;
  if (c.n == 0) {
    for_each_avoider(c, m, [&](const Word&) {
      ++total;
      return true;
    });
    return total;
  }
  parallel_partitions<std::int64_t>(
      c.n, jobs,
      [&](Letter k, std::int64_t& local) {
        for_each_avoider_first(c, m, k, [&](const Word&) {
          ++local;
          return true;
        });
      },
      [&](std::int64_t& part) { total += part; });
  return total;
}

}  // namespace

namespace serial {

BivariatePolynomial class_distribution(const AvoiderClass& c, EnumMethod m,
                                       StatFn qstat, StatFn tstat) {
  BivariatePolynomial total;
  for_each_avoider(c, m, [&](const Word& w) {
    accumulate_poly(total, w, qstat, tstat);
    return true;
  });
  return total;
}

BivariatePolynomial sn_distribution(int n, StatFn qstat, StatFn tstat) {
  BivariatePolynomial total;
  for_each_permutation(n, [&](const Word& w) {
    accumulate_poly(total, w, qstat, tstat);
    return true;
  });
  return total;
}

TupleDistribution class_tuple_distribution(const AvoiderClass& c, EnumMethod m,
                                           const StatList& stats) {
  TupleDistribution total;
  for_each_avoider(c, m, [&](const Word& w) {
    accumulate_tuple(total, w, stats);
    return true;
  });
  return total;
}

TupleDistribution sn_tuple_distribution(int n, const StatList& stats) {
  TupleDistribution total;
  for_each_permutation(n, [&](const Word& w) {
    accumulate_tuple(total, w, stats);
    return true;
  });
  return total;
}

std::optional<ScanFailure> scan_class(const AvoiderClass& c, EnumMethod m,
                                      const PointwiseCheck& check) {
  std::optional<ScanFailure> failure;
  for_each_avoider(c, m, [&](const Word& w) {
    std::optional<std::string> message = check(w);
    if (!message) return true;
    failure = ScanFailure{w, std::move(*message)};
    return false;
  });
  return failure;
}

std::optional<ScanFailure> scan_sn(int n, const PointwiseCheck& check) {
  std::optional<ScanFailure> failure;
  for_each_permutation(n, [&](const Word& w) {
    std::optional<std::string> message = check(w);
    if (!message) return true;
    failure = ScanFailure{w, std::move(*message)};
    return false;
  });
  return failure;
}

std::int64_t class_count(const AvoiderClass& c, EnumMethod m) {
  std::int64_t total = 0;
  for_each_avoider(c, m, [&](const Word&) {
    ++total;
    return true;
  });
  return total;
}

}  // namespace serial

BivariatePolynomial class_distribution(const AvoiderClass& c, EnumMethod m,
                                       StatFn qstat, StatFn tstat, int jobs) {
  return distribution_impl(&c, m, c.n, qstat, tstat, jobs);
}

BivariatePolynomial sn_distribution(int n, StatFn qstat, StatFn tstat,
                                    int jobs) {
  return distribution_impl(nullptr, EnumMethod::filter, n, qstat, tstat, jobs);
}

TupleDistribution class_tuple_distribution(const AvoiderClass& c, EnumMethod m,
                                           const StatList& stats, int jobs) {
  return tuples_impl(&c, m, c.n, stats, jobs);
}

TupleDistribution sn_tuple_distribution(int n, const StatList& stats,
                                        int jobs) {
  return tuples_impl(nullptr, EnumMethod::filter, n, stats, jobs);
}

std::optional<ScanFailure> scan_class(const AvoiderClass& c, EnumMethod m,
                                      const PointwiseCheck& check, int jobs) {
  return scan_impl(&c, m, c.n, check, jobs);
}

std::optional<ScanFailure> scan_sn(int n, const PointwiseCheck& check,
                                   int jobs) {
  return scan_impl(nullptr, EnumMethod::filter, n, check, jobs);
}

std::int64_t class_count(const AvoiderClass& c, EnumMethod m, int jobs) {
  return count_impl(c, m, jobs);
}

}  // namespace permstat
