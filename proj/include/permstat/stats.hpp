#pragma once

#include <cstdint>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

/// Positions i in [1, n-1] with w[i] > w[i+1], strictly increasing.
std::vector<int> descent_set(const Word& w);

/// des: number of descents.
std::int64_t descent_number(const Word& w);

/// maj: sum of the descent positions.
std::int64_t major_index(const Word& w);

/// inv: number of pairs i < j with w[i] > w[j].
std::int64_t inversion_number(const Word& w);

/// ides: descent number of the inverse of the standardization of w.
std::int64_t inverse_descent_number(const Word& w);

/// adj: positions i in [1, n] with w[i] - w[i+1] = 1, taking w[n+1] = 0.
/// Requires a nonempty permutation of {1,...,n} (the unit-difference test is
/// value-dependent); throws std::domain_error otherwise.
std::int64_t adjacency_statistic(const Word& w);

/// F: the first letter; throws std::domain_error on the empty word.
Letter first_letter(const Word& w);

/// The maximal increasing factors, in order.  Concatenating them
/// reproduces w; the number of runs is des(w) + 1 for nonempty w.
std::vector<Word> runs(const Word& w);

enum class Symmetry { complement, reverse, inverse };

/// complement: w[i] -> n+1-w[i]; reverse: w[i] -> w[n+1-i]; inverse: the
/// position-of-value table.  complement and inverse require a permutation of
/// {1,...,n}; reverse accepts any word.
Word transform(const Word& w, Symmetry kind);

/// Replaces the k-th smallest letter by k, yielding the order-isomorphic
/// permutation of {1,...,n}.
Word standardize(const Word& w);

}  // namespace permstat
