// Compares the serial reference sweeps against the OpenMP kernels on the
// workloads the verification suites lean on, and checks they agree while
// timing them.
//
//   ./bench_sweeps [threads]
//
// threads = 0 (default) uses the OpenMP default.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permstat/avoiders.hpp"
#include "permstat/pattern.hpp"
#include "permstat/stats.hpp"
#include "permstat/sweep.hpp"

using namespace permstat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename Serial, typename Parallel>
void bench(const char* name, Serial&& serial_fn, Parallel&& parallel_fn) {
  (void)serial_fn();  // warm up pattern tables and page cache

  auto t0 = std::chrono::steady_clock::now();
  auto serial_result = serial_fn();
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel_result = parallel_fn();
  const double parallel_s = seconds_since(t0);

  const bool same = serial_result == parallel_result;
  std::printf("%-38s serial %8.3fs   omp %8.3fs   speedup %5.2fx   %s\n", name,
              serial_s, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0,
              same ? "match" : "MISMATCH");
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
#ifdef _OPENMP
  std::printf("threads: %d\n", jobs > 0 ? jobs : omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const StatFn maj = statistic_by_name("maj");
  const StatFn des = statistic_by_name("des");
  const StatFn stat = statistic_by_name("stat");
  const StatFn adj = statistic_by_name("adj");
  const StatFn first = statistic_by_name("F");

  const AvoiderClass c213_12(12, Word::parse("213"));
  bench(
      "maj,des over S(12,213) structured",
      [&] {
        return serial::class_distribution(c213_12, EnumMethod::structured, maj,
                                          des);
      },
      [&] {
        return class_distribution(c213_12, EnumMethod::structured, maj, des,
                                  jobs);
      });

  const AvoiderClass c231_12(12, Word::parse("231"));
  bench(
      "stat,des over S(12,231) structured",
      [&] {
        return serial::class_distribution(c231_12, EnumMethod::structured,
                                          stat, des);
      },
      [&] {
        return class_distribution(c231_12, EnumMethod::structured, stat, des,
                                  jobs);
      });

  const AvoiderClass c132_10(10, Word::parse("132"));
  bench(
      "maj,des over S(10,132) filter",
      [&] {
        return serial::class_distribution(c132_10, EnumMethod::filter, maj,
                                          des);
      },
      [&] {
        return class_distribution(c132_10, EnumMethod::filter, maj, des, jobs);
      });

  bench(
      "maj+stat identity scan over S_9",
      [&] {
        return serial::scan_sn(9, [](const Word& w) {
          const std::int64_t lhs =
              major_index(w) + composite_statistic(w, Composite::stat);
          const std::int64_t rhs =
              10 * descent_number(w) - (first_letter(w) - 1);
          return lhs == rhs ? std::nullopt
                            : std::make_optional(std::string("mismatch"));
        }).has_value();
      },
      [&] {
        return scan_sn(9,
                       [](const Word& w) {
                         const std::int64_t lhs =
                             major_index(w) +
                             composite_statistic(w, Composite::stat);
                         const std::int64_t rhs =
                             10 * descent_number(w) - (first_letter(w) - 1);
                         return lhs == rhs
                                    ? std::nullopt
                                    : std::make_optional(std::string("mismatch"));
                       },
                       jobs)
            .has_value();
      });

  const StatList quintuple = {adj, des, first, maj, stat};
  bench(
      "(adj,des,F,maj,stat) tuples over S_8",
      [&] { return serial::sn_tuple_distribution(8, quintuple); },
      [&] { return sn_tuple_distribution(8, quintuple, jobs); });

  return 0;
}
