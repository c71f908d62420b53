#include "permstat/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/stats.hpp"

namespace permstat {

VincularPattern::VincularPattern(std::vector<Letter> letters,
                                 std::vector<int> block_len)
    : letters_(std::move(letters)), block_len_(std::move(block_len)) {}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::vector<int> block_len;
  int current = 0;
  for (char ch : text) {
    if (ch == '-') {
      if (current == 0)
        throw std::invalid_argument("pattern: empty block in '" +
                                    std::string(text) + "'");
      block_len.push_back(current);
      current = 0;
    } else if (ch >= '1' && ch <= '9') {
      letters.push_back(ch - '0');
      ++current;
    } else {
      throw std::invalid_argument("pattern: invalid character '" +
                                  std::string(1, ch) + "' in '" +
                                  std::string(text) + "'");
    }
  }
  if (current == 0)
    throw std::invalid_argument("pattern: empty block in '" +
                                std::string(text) + "'");
  block_len.push_back(current);
  Word underlying(letters);  // validates distinctness
  if (!underlying.is_standard())
    throw std::invalid_argument("pattern: letters of '" + std::string(text) +
                                "' do not form a permutation of {1,...,k}");
  return VincularPattern(std::move(letters), std::move(block_len));
}

VincularPattern VincularPattern::classical(const Word& p) {
  if (p.empty() || !p.is_standard())
    throw std::invalid_argument(
        "pattern: classical pattern must be a nonempty permutation of "
        "{1,...,k}");
  return VincularPattern(p.letters(),
                         std::vector<int>(p.letters().size(), 1));
}

std::string VincularPattern::str() const {
  std::string out;
  size_t pos = 0;
  for (size_t b = 0; b < block_len_.size(); ++b) {
    if (b > 0) out += '-';
    for (int t = 0; t < block_len_[b]; ++t)
      out += static_cast<char>('0' + letters_[pos++]);
  }
  return out;
}

namespace {

// Backtracking over block anchor positions.  `chosen` holds the host letters
// matched so far, aligned with the pattern prefix; each candidate letter is
// screened against all of them, so dead branches die at the first letter.
struct Matcher {
  std::span<const Letter> w;
  const std::vector<Letter>& pat;
  const std::vector<int>& block_len;
  std::vector<Letter> chosen;
  std::int64_t count = 0;
  bool exists_only = false;
  bool found = false;

  int suffix_len(size_t block) const {
    int len = 0;
    for (size_t b = block; b < block_len.size(); ++b) len += block_len[b];
    return len;
  }

  void run(size_t block, int from) {
    if (block == block_len.size()) {
      ++count;
      found = true;
      return;
    }
    const int len = block_len[block];
    const int last_start = static_cast<int>(w.size()) - suffix_len(block);
    for (int s = from; s <= last_start; ++s) {
      size_t taken = 0;
      for (int t = 0; t < len; ++t) {
        const Letter x = w[s + t];
        const Letter px = pat[chosen.size()];
        bool ok = true;
        for (size_t j = 0; j < chosen.size(); ++j) {
          if ((x < chosen[j]) != (px < pat[j])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        chosen.push_back(x);
        ++taken;
      }
      if (taken == static_cast<size_t>(len)) {
        run(block + 1, s + len);
        if (exists_only && found) {
          chosen.resize(chosen.size() - taken);
          return;
        }
      }
      chosen.resize(chosen.size() - taken);
    }
  }
};

std::int64_t count_occurrences_impl(std::span<const Letter> w,
                                    const VincularPattern& p,
                                    bool exists_only) {
  if (p.length() > static_cast<int>(w.size())) return 0;
  Matcher m{w, p.letters(), p.block_lengths(), {}, 0, exists_only, false};
  m.chosen.reserve(p.length());
  m.run(0, 0);
  return m.count;
}

// Length-3 classical containment in O(n^2): fix the two pattern letters
// whose third companion's constraint is one-sided, and answer that
// constraint from prefix/suffix extrema.
bool contains3(std::span<const Letter> w, Letter a, Letter b, Letter c) {
  const int n = static_cast<int>(w.size());
  if (n < 3) return false;
  const Letter lo = std::min({a, b, c});
  const Letter hi = std::max({a, b, c});

  if (c != lo && c != hi) {
    // 132 or 312: the constrained-by-both letter is the first one, so fix
    // (j, k) and ask the prefix for it.  132 needs an earlier value below
    // w[k] (prefix minimum); 312 needs one above w[k] (prefix maximum).
    const bool is_132 = (a == lo);
    std::vector<Letter> prefix(n);
    Letter best = w[0];
    for (int i = 0; i < n; ++i) {
      best = is_132 ? std::min(best, w[i]) : std::max(best, w[i]);
      prefix[i] = best;
    }
    for (int j = 1; j + 1 < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if ((w[j] < w[k]) != (b < c)) continue;
        if (is_132 ? prefix[j - 1] < w[k] : prefix[j - 1] > w[k]) return true;
      }
    }
    return false;
  }

  // 123, 213, 231, 321: fix (i, j) and ask the suffix for the third letter.
  std::vector<Letter> suffix(n);
  Letter best = w[n - 1];
  for (int i = n - 1; i >= 0; --i) {
    best = (c == hi) ? std::max(best, w[i]) : std::min(best, w[i]);
    suffix[i] = best;
  }
  for (int i = 0; i + 2 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      if ((w[i] < w[j]) != (a < b)) continue;
      if (c == hi) {
        // 123 needs suffix > w[j]; 213 needs suffix > w[i]
        const Letter bound = (a < b) ? w[j] : w[i];
        if (suffix[j + 1] > bound) return true;
      } else {
        // 231 needs suffix < w[i]; 321 needs suffix < w[j]
        const Letter bound = (a < b) ? w[i] : w[j];
        if (suffix[j + 1] < bound) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::int64_t count_occurrences(const Word& w, const VincularPattern& p) {
  return count_occurrences_impl(w.letters(), p, false);
}

bool contains_pattern(std::span<const Letter> w, const Word& classical) {
  const auto& p = classical.letters();
  if (p.empty() || !classical.is_standard())
    throw std::invalid_argument(
        "pattern: classical pattern must be a nonempty permutation of "
        "{1,...,k}");
  const int k = static_cast<int>(p.size());
  if (k > static_cast<int>(w.size())) return false;
  if (k == 1) return !w.empty();
  if (k == 2) {
    // one running extremum suffices
    Letter seen = w[0];
    for (size_t j = 1; j < w.size(); ++j) {
      if (p[0] < p[1] ? seen < w[j] : seen > w[j]) return true;
      seen = p[0] < p[1] ? std::min(seen, w[j]) : std::max(seen, w[j]);
    }
    return false;
  }
  if (k == 3) return contains3(w, p[0], p[1], p[2]);
  return count_occurrences_impl(w, VincularPattern::classical(classical),
                                true) > 0;
}

bool contains_pattern(const Word& w, const Word& classical) {
  return contains_pattern(std::span<const Letter>(w.letters()), classical);
}

bool avoids(const Word& w, const Word& classical) {
  return !contains_pattern(w, classical);
}

namespace {

const std::vector<VincularPattern>& composite_terms(Composite which) {
  static const std::vector<VincularPattern> stat_terms = {
      VincularPattern::parse("13-2"), VincularPattern::parse("21-3"),
      VincularPattern::parse("32-1"), VincularPattern::parse("21")};
  static const std::vector<VincularPattern> mak_terms = {
      VincularPattern::parse("1-32"), VincularPattern::parse("31-2"),
      VincularPattern::parse("32-1"), VincularPattern::parse("21")};
  static const std::vector<VincularPattern> maj_terms = {
      VincularPattern::parse("1-32"), VincularPattern::parse("2-31"),
      VincularPattern::parse("3-21"), VincularPattern::parse("21")};
  switch (which) {
    case Composite::stat:
      return stat_terms;
    case Composite::mak:
      return mak_terms;
    case Composite::maj_bs:
      return maj_terms;
  }
  throw std::invalid_argument("unknown composite statistic");
}

}  // namespace

std::int64_t composite_statistic(const Word& w, Composite which) {
  std::int64_t total = 0;
  for (const auto& p : composite_terms(which)) total += count_occurrences(w, p);
  return total;
}

namespace {

std::int64_t stat_maj(const Word& w) { return major_index(w); }
std::int64_t stat_stat(const Word& w) {
  return composite_statistic(w, Composite::stat);
}
std::int64_t stat_mak(const Word& w) {
  return composite_statistic(w, Composite::mak);
}
std::int64_t stat_maj_bs(const Word& w) {
  return composite_statistic(w, Composite::maj_bs);
}
std::int64_t stat_inv(const Word& w) { return inversion_number(w); }
std::int64_t stat_des(const Word& w) { return descent_number(w); }
std::int64_t stat_ides(const Word& w) { return inverse_descent_number(w); }
std::int64_t stat_first(const Word& w) { return first_letter(w); }
std::int64_t stat_adj(const Word& w) { return adjacency_statistic(w); }

}  // namespace

StatFn statistic_by_name(std::string_view name) {
  if (name == "maj") return &stat_maj;
  if (name == "stat") return &stat_stat;
  if (name == "mak") return &stat_mak;
  if (name == "inv") return &stat_inv;
  if (name == "des") return &stat_des;
  if (name == "ides") return &stat_ides;
  if (name == "F") return &stat_first;
  if (name == "adj") return &stat_adj;
  if (name == "maj_bs") return &stat_maj_bs;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = {
      "maj", "stat", "mak", "inv", "des", "ides", "F", "adj", "maj_bs"};
  return names;
}

}  // namespace permstat
