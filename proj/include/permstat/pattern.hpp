#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

/// A vincular (dashed) pattern: blocks of letters separated by dashes, the
/// concatenation being a permutation of {1,...,k}.  Letters inside one block
/// must sit at consecutive positions of the host word; a dash allows any gap.
/// A classical pattern is the special case of all-singleton blocks.
class VincularPattern {
public:
  /// Parses e.g. "2-31", "21", "1-32".  Valid characters are 1..9 and '-';
  /// blocks must be nonempty and the letters must form a permutation of
  /// {1,...,k}.  Throws std::invalid_argument otherwise.
  static VincularPattern parse(std::string_view text);

  /// The classical pattern of p (every letter its own block); p must be a
  /// nonempty permutation of {1,...,k}.
  static VincularPattern classical(const Word& p);

  int length() const { return static_cast<int>(letters_.size()); }
  int block_count() const { return static_cast<int>(block_len_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<int>& block_lengths() const { return block_len_; }

  /// Text form with dashes, e.g. "2-31".
  std::string str() const;

  friend bool operator==(const VincularPattern&,
                         const VincularPattern&) = default;

private:
  VincularPattern(std::vector<Letter> letters, std::vector<int> block_len);

  std::vector<Letter> letters_;
  std::vector<int> block_len_;
};

/// Number of occurrences of p in w: index tuples i_1 < ... < i_k whose
/// letters are order-isomorphic to p and consecutive within each block.
/// Direct enumeration of block anchor positions with incremental
/// order-isomorphism pruning; O(n^2) for the two-block length-3 patterns the
/// composite statistics use, generic backtracking beyond.
std::int64_t count_occurrences(const Word& w, const VincularPattern& p);

/// Classical containment.  Length <= 3 patterns use an O(n^2) pairwise scan
/// with prefix/suffix extrema; longer patterns fall back to the generic
/// matcher with early exit.
bool contains_pattern(std::span<const Letter> w, const Word& classical);
bool contains_pattern(const Word& w, const Word& classical);
bool avoids(const Word& w, const Word& classical);

enum class Composite { stat, mak, maj_bs };

/// The pattern-combination statistics:
///   stat   = (13-2) + (21-3) + (32-1) + (21)
///   mak    = (1-32) + (31-2) + (32-1) + (21)
///   maj_bs = (1-32) + (2-31) + (3-21) + (21)
std::int64_t composite_statistic(const Word& w, Composite which);

/// A permutation statistic usable in distributions and sweeps.
using StatFn = std::int64_t (*)(const Word&);

/// Resolves "maj", "stat", "mak", "inv", "des", "ides", "F", "adj",
/// "maj_bs"; throws std::invalid_argument for anything else.
StatFn statistic_by_name(std::string_view name);

/// The recognized statistic names, in canonical order.
const std::vector<std::string>& statistic_names();

}  // namespace permstat
