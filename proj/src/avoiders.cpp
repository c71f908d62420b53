#include "permstat/avoiders.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "permstat/checked.hpp"

namespace permstat {

std::int64_t catalan(int n) {
  constexpr int kMax = 30;
  if (n < 0 || n > kMax)
    throw std::domain_error("catalan: n must be in [0, 30]");
  static const std::array<std::int64_t, kMax + 1> table = [] {
    std::array<std::int64_t, kMax + 1> c{};
    c[0] = 1;
    for (int m = 0; m < kMax; ++m) {
      std::int64_t sum = 0;
      for (int i = 0; i <= m; ++i)
        sum = checked_add(sum, checked_mul(c[i], c[m - i]));
      c[m + 1] = sum;
    }
    return c;
  }();
  return table[n];
}

AvoiderClass::AvoiderClass(int n_, Word sigma_)
    : n(n_), sigma(std::move(sigma_)) {
  if (n < 0) throw std::domain_error("avoider class: negative n");
  if (sigma.size() != 3 || !sigma.is_standard())
    throw std::domain_error(
        "avoider class: sigma must be a length-3 permutation of {1,2,3}");
}

AvoiderClass AvoiderClass::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ') compact += ch;
  const auto bad = [&] {
    return std::invalid_argument("avoider class: expected S(n,sigma), got '" +
                                 std::string(text) + "'");
  };
  if (compact.size() < 8 || compact[0] != 'S' || compact[1] != '(' ||
      compact.back() != ')')
    throw bad();
  const size_t comma = compact.find(',');
  if (comma == std::string::npos) throw bad();
  const std::string n_part = compact.substr(2, comma - 2);
  const std::string sigma_part =
      compact.substr(comma + 1, compact.size() - comma - 2);
  if (n_part.empty() ||
      !std::all_of(n_part.begin(), n_part.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw bad();
  if (n_part.size() > 3) throw bad();
  return AvoiderClass(std::stoi(n_part), Word::parse(sigma_part));
}

std::string AvoiderClass::str() const {
  return "S(" + std::to_string(n) + "," + sigma.str() + ")";
}

bool structured_supported(const Word& sigma) {
  static const Word s213 = Word::parse("213");
  static const Word s231 = Word::parse("231");
  return sigma == s213 || sigma == s231;
}

EnumMethod default_method(const Word& sigma) {
  return structured_supported(sigma) ? EnumMethod::structured
                                     : EnumMethod::filter;
}

namespace {

bool visit_buffer(Word& scratch, const std::vector<Letter>& buf,
                  const WordVisitor& visit) {
  detail::WordAccess::letters(scratch) = buf;
  return visit(scratch);
}

// ---- filter enumeration -------------------------------------------------

bool filter_walk(std::vector<Letter> buf, size_t fixed_prefix,
                 const Word* sigma, const WordVisitor& visit) {
  Word scratch;
  do {
    if (sigma == nullptr ||
        !contains_pattern(std::span<const Letter>(buf), *sigma)) {
      if (!visit_buffer(scratch, buf, visit)) return false;
    }
  } while (std::next_permutation(buf.begin() + fixed_prefix, buf.end()));
  return true;
}

// ---- structured enumeration ---------------------------------------------

// Streaming lexicographic generator for S_n(213) and S_n(231).
//
// A 213-avoider of a value slice is: some first letter k, then a
// 213-avoider of the values above k, then one of the values below k.  A
// 231-avoider puts the values below k first.  The generator keeps a
// worklist of (position, value-slice) segments ordered by position and
// fills them left to right, choosing first letters in increasing order, so
// complete words appear lexicographically with O(n) live state.
struct StructuredGen {
  int n;
  bool high_part_first;  // true for 213-avoiders, false for 231-avoiders
  const WordVisitor& visit;
  std::vector<Letter> buf;
  Word scratch;

  struct Seg {
    int pos;
    Letter vlo, vhi;  // half-open value range; values are vlo..vhi-1 offset 1
  };
  std::vector<Seg> pending;

  StructuredGen(int n_, bool high_first, const WordVisitor& v)
      : n(n_), high_part_first(high_first), visit(v), buf(n_) {}

  // value at slice offset r is simply vlo + r + 1 when the base set is
  // {1,...,n}; slices are intervals of it throughout
  static Letter value(Letter vlo, int r) { return vlo + r + 1; }

  // s by value: pending.insert below may reallocate
  bool place(size_t idx, Seg s, int r) {
    const int m = s.vhi - s.vlo;
    buf[s.pos] = value(s.vlo, r);
    Seg first_child{}, second_child{};
    if (high_part_first) {
      first_child = {s.pos + 1, static_cast<Letter>(s.vlo + r + 1), s.vhi};
      second_child = {s.pos + 1 + (m - 1 - r), s.vlo,
                      static_cast<Letter>(s.vlo + r)};
    } else {
      first_child = {s.pos + 1, s.vlo, static_cast<Letter>(s.vlo + r)};
      second_child = {s.pos + 1 + r, static_cast<Letter>(s.vlo + r + 1),
                      s.vhi};
    }
    pending.insert(pending.begin() + idx + 1, {first_child, second_child});
    const bool cont = fill(idx + 1);
    pending.erase(pending.begin() + idx + 1, pending.begin() + idx + 3);
    return cont;
  }

  bool fill(size_t idx) {
    if (idx == pending.size()) return visit_buffer(scratch, buf, visit);
    const Seg s = pending[idx];
    if (s.vlo == s.vhi) return fill(idx + 1);
    for (int r = 0; r < s.vhi - s.vlo; ++r)
      if (!place(idx, s, r)) return false;
    return true;
  }

  bool run(Letter fixed_first) {
    if (n == 0) {
      Word empty;
      return visit(empty);
    }
    pending.clear();
    pending.push_back({0, 0, static_cast<Letter>(n)});
    if (fixed_first == 0) return fill(0);
    return place(0, pending[0], fixed_first - 1);
  }
};

bool structured_walk(const AvoiderClass& c, Letter fixed_first,
                     const WordVisitor& visit) {
  static const Word s213 = Word::parse("213");
  StructuredGen gen(c.n, c.sigma == s213, visit);
  return gen.run(fixed_first);
}

std::vector<Letter> first_letter_buffer(int n, Letter first) {
  std::vector<Letter> buf;
  buf.reserve(n);
  buf.push_back(first);
  for (Letter v = 1; v <= n; ++v)
    if (v != first) buf.push_back(v);
  return buf;
}

}  // namespace

bool for_each_avoider(const AvoiderClass& c, EnumMethod method,
                      const WordVisitor& visit) {
  if (method == EnumMethod::structured && !structured_supported(c.sigma))
    throw std::invalid_argument(
        "structured enumeration exists only for sigma in {213, 231}");
  if (c.n == 0) {
    Word empty;
    return visit(empty);
  }
  if (method == EnumMethod::structured) return structured_walk(c, 0, visit);
  return filter_walk(Word::identity(c.n).letters(), 0, &c.sigma, visit);
}

bool for_each_avoider_first(const AvoiderClass& c, EnumMethod method,
                            Letter first, const WordVisitor& visit) {
  if (method == EnumMethod::structured && !structured_supported(c.sigma))
    throw std::invalid_argument(
        "structured enumeration exists only for sigma in {213, 231}");
  if (c.n < 1 || first < 1 || first > c.n)
    throw std::domain_error("first letter out of range");
  if (method == EnumMethod::structured)
    return structured_walk(c, first, visit);
  return filter_walk(first_letter_buffer(c.n, first), 1, &c.sigma, visit);
}

bool for_each_permutation(int n, const WordVisitor& visit) {
  if (n < 0) throw std::domain_error("negative n");
  if (n == 0) {
    Word empty;
    return visit(empty);
  }
  return filter_walk(Word::identity(n).letters(), 0, nullptr, visit);
}

bool for_each_permutation_first(int n, Letter first,
                                const WordVisitor& visit) {
  if (n < 1 || first < 1 || first > n)
    throw std::domain_error("first letter out of range");
  return filter_walk(first_letter_buffer(n, first), 1, nullptr, visit);
}

std::vector<Word> list_avoiders(const AvoiderClass& c, EnumMethod method) {
  std::vector<Word> out;
  for_each_avoider(c, method, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<std::vector<std::int64_t>> joint_distribution(
    const AvoiderClass& c, const std::vector<std::string>& stat_names) {
  if (stat_names.empty())
    throw std::invalid_argument("joint distribution: no statistics named");
  std::vector<StatFn> fns;
  for (const auto& name : stat_names) fns.push_back(statistic_by_name(name));
  std::vector<std::vector<std::int64_t>> out;
  for_each_avoider(c, default_method(c.sigma), [&](const Word& w) {
    std::vector<std::int64_t> row;
    row.reserve(fns.size());
    for (StatFn fn : fns) row.push_back(fn(w));
    out.push_back(std::move(row));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permstat
