#include "permstat/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

namespace {

// merge-count on a scratch pair of buffers; counts pairs left > right
std::int64_t merge_count(std::vector<Letter>& a, std::vector<Letter>& tmp,
                         int lo, int hi) {
  if (hi - lo < 2) return 0;
  int mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
  int i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[out++] = a[i++];
    } else {
      count += mid - i;
      tmp[out++] = a[j++];
    }
  }
  while (i < mid) tmp[out++] = a[i++];
  while (j < hi) tmp[out++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
  return count;
}

std::vector<Letter> standard_form(const std::vector<Letter>& letters) {
  std::vector<Letter> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Letter> out(letters.size());
  for (size_t i = 0; i < letters.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), letters[i]);
    out[i] = static_cast<Letter>(it - sorted.begin()) + 1;
  }
  return out;
}

}  // namespace

std::vector<int> descent_set(const Word& w) {
  const auto& v = w.letters();
  std::vector<int> out;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::int64_t descent_number(const Word& w) {
  const auto& v = w.letters();
  std::int64_t count = 0;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) ++count;
  return count;
}

std::int64_t major_index(const Word& w) {
  const auto& v = w.letters();
  std::int64_t sum = 0;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) sum += static_cast<std::int64_t>(i) + 1;
  return sum;
}

std::int64_t inversion_number(const Word& w) {
  std::vector<Letter> a = w.letters();
  std::vector<Letter> tmp(a.size());
  return merge_count(a, tmp, 0, static_cast<int>(a.size()));
}

std::int64_t inverse_descent_number(const Word& w) {
  const std::vector<Letter> p = standard_form(w.letters());
  const int n = static_cast<int>(p.size());
  std::vector<Letter> inverse(n);
  for (int i = 0; i < n; ++i) inverse[p[i] - 1] = static_cast<Letter>(i) + 1;
  std::int64_t count = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (inverse[i] > inverse[i + 1]) ++count;
  return count;
}

std::int64_t adjacency_statistic(const Word& w) {
  if (w.empty()) throw std::domain_error("adj: empty word");
  if (!w.is_standard())
    throw std::domain_error("adj: word must be a permutation of {1,...,n}");
  const auto& v = w.letters();
  const int n = static_cast<int>(v.size());
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i) {
    const Letter next = (i + 1 < n) ? v[i + 1] : 0;  // sentinel
    if (v[i] - next == 1) ++count;
  }
  return count;
}

Letter first_letter(const Word& w) {
  if (w.empty()) throw std::domain_error("F: empty word");
  return w.letters().front();
}

std::vector<Word> runs(const Word& w) {
  const auto& v = w.letters();
  std::vector<Word> out;
  size_t start = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i + 1 == v.size() || v[i] > v[i + 1]) {
      out.push_back(Word::unchecked(
          std::vector<Letter>(v.begin() + start, v.begin() + i + 1)));
      start = i + 1;
    }
  }
  return out;
}

Word transform(const Word& w, Symmetry kind) {
  const auto& v = w.letters();
  const int n = static_cast<int>(v.size());
  if (kind != Symmetry::reverse && !w.is_standard())
    throw std::domain_error(
        "transform: complement/inverse require a permutation of {1,...,n}");
  std::vector<Letter> out(n);
  switch (kind) {
    case Symmetry::complement:
      for (int i = 0; i < n; ++i) out[i] = static_cast<Letter>(n) + 1 - v[i];
      break;
    case Symmetry::reverse:
      for (int i = 0; i < n; ++i) out[i] = v[n - 1 - i];
      break;
    case Symmetry::inverse:
      for (int i = 0; i < n; ++i) out[v[i] - 1] = static_cast<Letter>(i) + 1;
      break;
  }
  return Word::unchecked(std::move(out));
}

Word standardize(const Word& w) {
  return Word::unchecked(standard_form(w.letters()));
}

}  // namespace permstat
