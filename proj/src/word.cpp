#include "permstat/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permstat {

namespace {

void require_distinct_positive(const std::vector<Letter>& letters,
                               const char* what) {
  std::vector<Letter> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0)
    throw std::invalid_argument(std::string(what) +
                                ": letters must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(what) + ": repeated letter");
}

Letter parse_int_token(std::string_view token, const char* what) {
  Letter value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value <= 0)
    throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                std::string(token) + "'");
  return value;
}

std::vector<Letter> parse_letters(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::vector<Letter> letters;
  if (text.empty()) return letters;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      size_t end = (comma == std::string_view::npos) ? text.size() : comma;
      letters.push_back(parse_int_token(text.substr(start, end - start), what));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(std::string(what) +
                                    ": digit string may only contain 1-9 "
                                    "(use the comma form for letters > 9)");
      letters.push_back(ch - '0');
    }
  }
  return letters;
}

std::string format_letters(const std::vector<Letter>& letters) {
  bool single_digits =
      std::all_of(letters.begin(), letters.end(), [](Letter v) { return v <= 9; });
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (!single_digits && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  require_distinct_positive(letters_, "word");
}

Word Word::parse(std::string_view text) {
  return Word(parse_letters(text, "word"));
}

Word Word::identity(int n) {
  if (n < 0) throw std::domain_error("identity: negative length");
  std::vector<Letter> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  return unchecked(std::move(letters));
}

Word Word::unchecked(std::vector<Letter> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Letter Word::at(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("word position");
  return letters_[i - 1];
}

bool Word::is_standard() const {
  // letters are distinct, so "all in [1, n]" pins the set to {1,...,n}
  const Letter n = static_cast<Letter>(size());
  return std::all_of(letters_.begin(), letters_.end(),
                     [n](Letter v) { return v >= 1 && v <= n; });
}

GroundSet Word::ground_set() const { return GroundSet::of(*this); }

std::string Word::str() const { return format_letters(letters_); }

GroundSet::GroundSet(std::vector<Letter> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (!elements_.empty() && elements_.front() <= 0)
    throw std::invalid_argument("ground set: elements must be positive");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("ground set: repeated element");
}

GroundSet GroundSet::parse(std::string_view text) {
  return GroundSet(parse_letters(text, "ground set"));
}

GroundSet GroundSet::interval(Letter lo, Letter hi) {
  GroundSet s;
  if (lo <= hi) {
    s.elements_.resize(hi - lo + 1);
    std::iota(s.elements_.begin(), s.elements_.end(), lo);
  }
  return s;
}

GroundSet GroundSet::of(const Word& w) {
  GroundSet s;
  s.elements_ = w.letters();
  std::sort(s.elements_.begin(), s.elements_.end());
  return s;
}

Letter GroundSet::at(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("ground set index");
  return elements_[i - 1];
}

int GroundSet::rank(Letter v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v)
    throw std::domain_error("ground set: no such element");
  return static_cast<int>(it - elements_.begin()) + 1;
}

bool GroundSet::contains(Letter v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string GroundSet::str() const { return format_letters(elements_); }

}  // namespace permstat
