#include "permstat/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permstat/pattern.hpp"
#include "permstat/stats.hpp"

namespace permstat {

namespace {

// Both maps run on index ranges with an explicit work stack: a frame maps
// the input slice [w_lo, w_hi) and the sorted target slice [t_lo, t_hi) to
// the output slice starting at out_lo.  The two recursive parts of a frame
// write disjoint output ranges, so processing order is irrelevant.  Depth
// and stack size stay O(n).
struct Frame {
  int w_lo, w_hi;
  int t_lo, t_hi;
  int out_lo;
};

Word transport(const Word& input, const GroundSet& target, bool to_231) {
  const int n = input.size();
  if (target.size() != n)
    throw std::domain_error("ground set size " + std::to_string(target.size()) +
                            " does not match word length " + std::to_string(n));
  const auto& w = input.letters();
  const auto& tv = target.elements();
  std::vector<Letter> out(n);
  std::vector<Frame> stack;
  stack.push_back({0, n, 0, n, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const int len = f.w_hi - f.w_lo;
    if (len == 0) continue;
    if (to_231) {
      // pivot on the minimum of the slice; its 1-based position is i
      const int m = static_cast<int>(
          std::min_element(w.begin() + f.w_lo, w.begin() + f.w_hi) -
          w.begin());
      const int i = m - f.w_lo + 1;
      // left part (before the minimum) maps onto the i-1 elements under the
      // target maximum; right part onto the len-i smallest
      out[f.out_lo + (len - i)] = tv[f.t_hi - 1];
      stack.push_back({f.w_lo, m, f.t_lo + (len - i), f.t_hi - 1,
                       f.out_lo + (len - i) + 1});
      stack.push_back({m + 1, f.w_hi, f.t_lo, f.t_lo + (len - i), f.out_lo});
    } else {
      // pivot on the maximum; its 1-based position is j
      const int m = static_cast<int>(
          std::max_element(w.begin() + f.w_lo, w.begin() + f.w_hi) -
          w.begin());
      const int j = m - f.w_lo + 1;
      // target minimum sits after the image of the right part; left part
      // maps onto elements 2..j, right part onto the top len-j
      out[f.out_lo + (len - j)] = tv[f.t_lo];
      stack.push_back({f.w_lo, m, f.t_lo + 1, f.t_lo + j,
                       f.out_lo + (len - j) + 1});
      stack.push_back({m + 1, f.w_hi, f.t_lo + j, f.t_hi, f.out_lo});
    }
  }
  return Word::unchecked(std::move(out));
}

const Word& pattern_213() {
  static const Word p = Word::parse("213");
  return p;
}

const Word& pattern_231() {
  static const Word p = Word::parse("231");
  return p;
}

// shared shape of alpha and beta: first letter, then the two transported
// value blocks
Word first_letter_map(const Word& input, bool validate, bool is_alpha) {
  const char* name = is_alpha ? "alpha" : "beta";
  if (input.empty())
    throw std::domain_error(std::string(name) + ": empty word");
  if (!input.is_standard())
    throw std::domain_error(std::string(name) +
                            ": input must be a permutation of {1,...,n}");
  if (validate) {
    const Word& forbidden = is_alpha ? pattern_213() : pattern_231();
    if (contains_pattern(input, forbidden))
      throw std::domain_error(std::string(name) + ": input contains " +
                              forbidden.str());
  }
  const auto& v = input.letters();
  const int n = input.size();
  const Letter k = v[0];
  // a valid avoider splits after its first letter into the block of values
  // above k and the block below; block lengths follow from k alone
  const int high_len = n - k;
  std::vector<Letter> high, low;
  if (is_alpha) {
    high.assign(v.begin() + 1, v.begin() + 1 + high_len);
    low.assign(v.begin() + 1 + high_len, v.end());
  } else {
    low.assign(v.begin() + 1, v.begin() + 1 + (k - 1));
    high.assign(v.begin() + 1 + (k - 1), v.end());
  }
  const Word high_word = Word::unchecked(std::move(high));
  const Word low_word = Word::unchecked(std::move(low));
  const GroundSet low_set = GroundSet::interval(1, k - 1);
  const GroundSet high_set = GroundSet::interval(k + 1, static_cast<Letter>(n));
  const Word low_img = transport(low_word, low_set, is_alpha);
  const Word high_img = transport(high_word, high_set, is_alpha);
  std::vector<Letter> out;
  out.reserve(n);
  out.push_back(k);
  if (is_alpha) {
    out.insert(out.end(), low_img.letters().begin(), low_img.letters().end());
    out.insert(out.end(), high_img.letters().begin(), high_img.letters().end());
  } else {
    out.insert(out.end(), high_img.letters().begin(), high_img.letters().end());
    out.insert(out.end(), low_img.letters().begin(), low_img.letters().end());
  }
  return Word::unchecked(std::move(out));
}

}  // namespace

Word phi(const Word& pi, const GroundSet& target) {
  return transport(pi, target, true);
}

Word varphi(const Word& sigma, const GroundSet& target) {
  return transport(sigma, target, false);
}

Word alpha(const Word& pi, bool validate) {
  return first_letter_map(pi, validate, true);
}

Word beta(const Word& sigma, bool validate) {
  return first_letter_map(sigma, validate, false);
}

std::string StatProfile::str() const {
  return "(F=" + std::to_string(first) + ", maj=" + std::to_string(maj) +
         ", stat=" + std::to_string(stat) + ", des=" + std::to_string(des) +
         ", ides=" + std::to_string(ides) + ")";
}

StatProfile stat_profile(const Word& p) {
  if (p.empty()) throw std::domain_error("stat profile: empty word");
  if (!p.is_standard())
    throw std::domain_error(
        "stat profile: word must be a permutation of {1,...,n}");
  return StatProfile{first_letter(p), major_index(p),
                     composite_statistic(p, Composite::stat),
                     descent_number(p), inverse_descent_number(p)};
}

}  // namespace permstat
