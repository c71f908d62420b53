#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// Letters are positive 32-bit integers; statistic values are 64-bit.
using Letter = std::int32_t;

class GroundSet;

namespace detail {
struct WordAccess;
}

/// A permutation written as a word: pairwise distinct positive integers over
/// an arbitrary finite ground set.  Positions are 1-based in every public
/// interface.  The empty word is a valid value.  Words are immutable and
/// compare lexicographically.
class Word {
public:
  Word() = default;

  /// Validates that every letter is positive and no letter repeats.
  explicit Word(std::vector<Letter> letters);

  /// Accepts the two canonical text forms: a space-free digit string
  /// ("25678341", only letters 1..9) or a comma-separated list ("12,3,7").
  /// The empty string parses to the empty word.
  static Word parse(std::string_view text);

  /// The word 1 2 ... n.
  static Word identity(int n);

  /// Wraps letters the caller already knows to be pairwise distinct and
  /// positive (generators and the recursive maps construct permutations by
  /// design and skip re-validation).
  static Word unchecked(std::vector<Letter> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// 1-based access; throws std::out_of_range outside [1, n].
  Letter at(int i) const;

  const std::vector<Letter>& letters() const { return letters_; }

  /// True when the ground set is exactly {1, ..., n}.
  bool is_standard() const;

  GroundSet ground_set() const;

  /// Canonical text form: digit string when all letters are <= 9, otherwise
  /// comma-separated.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;

  friend struct detail::WordAccess;
};

/// A finite set of positive integers, stored strictly increasing.  Supports
/// 1-based select (at) and rank queries.
class GroundSet {
public:
  GroundSet() = default;

  /// Sorts the elements; throws on duplicates or non-positive values.
  explicit GroundSet(std::vector<Letter> elements);

  /// Same text forms as Word::parse; element order in the input is
  /// irrelevant.
  static GroundSet parse(std::string_view text);

  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static GroundSet interval(Letter lo, Letter hi);

  /// The set of letters of a word.
  static GroundSet of(const Word& w);

  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }

  /// 1-based select; throws std::out_of_range outside [1, size].
  Letter at(int i) const;

  /// 1-based rank of v; throws std::domain_error when v is not a member.
  int rank(Letter v) const;

  bool contains(Letter v) const;

  const std::vector<Letter>& elements() const { return elements_; }

  std::string str() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
  std::vector<Letter> elements_;
};

namespace detail {

/// Enumeration internals: overwrite a Word's letters in place without
/// re-validating.  Every caller maintains the distinctness invariant itself.
struct WordAccess {
  static std::vector<Letter>& letters(Word& w) { return w.letters_; }
};

}  // namespace detail

}  // namespace permstat
