#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/pattern.hpp"
#include "permstat/word.hpp"

namespace permstat {

/// n-th Catalan number via C_0 = 1, C_{n+1} = sum C_i C_{n-i}, with checked
/// arithmetic.  Supported for 0 <= n <= 30.
std::int64_t catalan(int n);

/// The class S_n(sigma) of permutations of {1,...,n} avoiding a length-3
/// pattern sigma.
struct AvoiderClass {
  int n = 0;
  Word sigma;

  AvoiderClass(int n, Word sigma);

  /// Parses the class syntax "S(n,sigma)", e.g. "S(8,213)".
  static AvoiderClass parse(std::string_view text);

  std::string str() const;
};

enum class EnumMethod { filter, structured };

/// The structured generator exists for sigma in {213, 231} (the block
/// decompositions by the position of the first letter).
bool structured_supported(const Word& sigma);

/// structured where supported, filter otherwise.
EnumMethod default_method(const Word& sigma);

/// Visitors return false to stop early.
using WordVisitor = std::function<bool(const Word&)>;

/// Visits every member of the class exactly once, in lexicographic order.
/// The filter method walks S_n by successor computation and tests avoidance;
/// the structured method generates members directly by recursive value
/// splits and streams them in lexicographic order with O(n) state.  Returns
/// false iff a visitor stopped the stream.
bool for_each_avoider(const AvoiderClass& c, EnumMethod method,
                      const WordVisitor& visit);

/// Restriction of the stream to members with the given first letter (the
/// partition the parallel kernels use).  Requires n >= 1 and
/// 1 <= first <= n.
bool for_each_avoider_first(const AvoiderClass& c, EnumMethod method,
                            Letter first, const WordVisitor& visit);

/// Lexicographic walk over all of S_n, and its first-letter restriction.
bool for_each_permutation(int n, const WordVisitor& visit);
bool for_each_permutation_first(int n, Letter first, const WordVisitor& visit);

/// Materialized class (small n convenience).
std::vector<Word> list_avoiders(const AvoiderClass& c, EnumMethod method);

/// The multiset {(st_1(p), ..., st_k(p)) : p in the class}, sorted.
std::vector<std::vector<std::int64_t>> joint_distribution(
    const AvoiderClass& c, const std::vector<std::string>& stat_names);

}  // namespace permstat
