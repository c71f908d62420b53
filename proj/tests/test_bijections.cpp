#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "permstat/avoiders.hpp"
#include "permstat/bijections.hpp"
#include "permstat/pattern.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

namespace {

GroundSet random_ground_set(std::mt19937_64& rng, int size) {
  std::vector<Letter> pool(3 * size + 5);
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Letter>(i) + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(size);
  return GroundSet(pool);
}

}  // namespace

TEST_CASE("phi golden values") {
  CHECK(phi(Word::parse("63542"), GroundSet::parse("1,3,5,7,9")) ==
        Word::parse("93175"));
  CHECK(phi(Word::parse("54"), GroundSet::parse("1,3")) == Word::parse("31"));
  CHECK(phi(Word(), GroundSet()) == Word());
  CHECK(phi(Word::parse("567834"), GroundSet::interval(3, 8)) ==
        Word::parse("384567"));
  CHECK_THROWS_AS(phi(Word::parse("12"), GroundSet::parse("1,2,3")),
                  std::domain_error);
}

TEST_CASE("varphi golden values") {
  CHECK(varphi(Word::parse("93175"), GroundSet::parse("2,3,4,5,6")) ==
        Word::parse("63542"));
  CHECK(varphi(Word::parse("5"), GroundSet::parse("6")) == Word::parse("6"));
  CHECK(varphi(Word(), GroundSet()) == Word());
  CHECK_THROWS_AS(varphi(Word::parse("12"), GroundSet::parse("1")),
                  std::domain_error);
}

TEST_CASE("alpha and beta golden values") {
  CHECK(alpha(Word::parse("25678341")) == Word::parse("21384567"));
  CHECK(beta(Word::parse("21384567")) == Word::parse("25678341"));
  CHECK(alpha(Word::parse("1")) == Word::parse("1"));
  CHECK(beta(Word::parse("1")) == Word::parse("1"));
  for (int n = 1; n <= 9; ++n) CHECK(alpha(Word::identity(n)) == Word::identity(n));
}

TEST_CASE("alpha and beta validate their inputs") {
  CHECK_THROWS_AS(alpha(Word()), std::domain_error);
  CHECK_THROWS_AS(alpha(Word::parse("213")), std::domain_error);
  CHECK_THROWS_AS(alpha(Word::parse("93175")), std::domain_error);
  CHECK_THROWS_AS(beta(Word::parse("231")), std::domain_error);
  // force mode skips only the avoidance check
  CHECK_NOTHROW(alpha(Word::parse("213"), false));
  CHECK_THROWS_AS(alpha(Word::parse("93175"), false), std::domain_error);
}

TEST_CASE("phi lands in the 231 avoiders for every input word") {
  const Word p231 = Word::parse("231");
  const Word p213 = Word::parse("213");
  const GroundSet target = GroundSet::parse("2,4,6,8,10,12");
  for (const Word& p : oracle::all_permutations(6)) {
    CHECK(avoids(phi(p, target), p231));
    CHECK(avoids(varphi(p, target), p213));
  }
}

TEST_CASE("round trips through phi and varphi") {
  std::mt19937_64 rng(4242);
  for (int n = 0; n <= 8; ++n) {
    const GroundSet target = random_ground_set(rng, n);
    for_each_avoider(AvoiderClass(n, Word::parse("213")),
                     EnumMethod::structured, [&](const Word& w) {
                       CHECK(varphi(phi(w, target), GroundSet::interval(1, n)) ==
                             w);
                       return true;
                     });
  }
  // the law holds over arbitrary source ground sets too
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 9;
    const GroundSet source = random_ground_set(rng, n);
    const GroundSet target = random_ground_set(rng, n);
    // build a 213-avoiding word over `source` by transporting a random
    // permutation, then check the round trip on it
    const Word over_source = varphi(oracle::random_word(rng, n, n), source);
    CHECK(varphi(phi(over_source, target), source) == over_source);
  }
}

TEST_CASE("alpha and beta are mutually inverse on whole classes") {
  for (int n = 1; n <= 7; ++n) {
    for_each_avoider(AvoiderClass(n, Word::parse("213")),
                     EnumMethod::structured, [](const Word& w) {
                       CHECK(beta(alpha(w)) == w);
                       return true;
                     });
    for_each_avoider(AvoiderClass(n, Word::parse("231")),
                     EnumMethod::structured, [](const Word& w) {
                       CHECK(alpha(beta(w)) == w);
                       return true;
                     });
  }
}

TEST_CASE("phi reflects the descent set of a 213 avoider") {
  std::mt19937_64 rng(777);
  for (int n = 1; n <= 7; ++n) {
    const GroundSet target = random_ground_set(rng, n);
    for_each_avoider(AvoiderClass(n, Word::parse("213")),
                     EnumMethod::structured, [&](const Word& w) {
                       std::set<int> expected;
                       for (int j : descent_set(w)) expected.insert(n - j);
                       const auto image_descents = descent_set(phi(w, target));
                       const std::set<int> actual(image_descents.begin(),
                                                  image_descents.end());
                       CHECK(actual == expected);
                       CHECK(descent_number(w) ==
                             descent_number(phi(w, target)));
                       CHECK(inverse_descent_number(w) ==
                             inverse_descent_number(phi(w, target)));
                       return true;
                     });
  }
}

TEST_CASE("alpha transports the statistic profile with maj and stat swapped") {
  for (int n = 1; n <= 7; ++n) {
    for_each_avoider(
        AvoiderClass(n, Word::parse("213")), EnumMethod::structured,
        [&](const Word& w) {
          const Word image = alpha(w);
          const StatProfile before = stat_profile(w);
          const StatProfile after = stat_profile(image);
          CHECK(after.first == before.first);
          CHECK(after.maj == before.stat);
          CHECK(after.stat == before.maj);
          CHECK(after.des == before.des);
          CHECK(after.ides == before.ides);
          // complementary major indices sum against des and the first letter
          CHECK(major_index(image) + major_index(w) ==
                (n + 1) * descent_number(w) - (before.first - 1));
          return true;
        });
  }
}

TEST_CASE("stat profile golden values") {
  const StatProfile p = stat_profile(Word::parse("25678341"));
  CHECK(p == StatProfile{2, 12, 5, 2, 2});
  CHECK(stat_profile(Word::parse("1")) == StatProfile{1, 0, 0, 0, 0});
  CHECK(stat_profile(Word::parse("21384567")) == StatProfile{2, 5, 12, 2, 2});
  CHECK(p.str() == "(F=2, maj=12, stat=5, des=2, ides=2)");
  CHECK_THROWS_AS(stat_profile(Word()), std::domain_error);
  CHECK_THROWS_AS(stat_profile(Word::parse("93175")), std::domain_error);
}

TEST_CASE("the maps handle deep words without recursion limits") {
  const int n = 10000;
  // the decreasing word keeps its minimum at the far end, the identity at
  // the near end; together they maximize both split directions
  std::vector<Letter> decreasing(n);
  for (int i = 0; i < n; ++i) decreasing[i] = static_cast<Letter>(n - i);
  const Word deep = Word::unchecked(std::move(decreasing));
  const GroundSet target = GroundSet::interval(1, n);
  const Word image = phi(deep, target);
  CHECK(varphi(image, target) == deep);
  const Word identity = Word::identity(n);
  CHECK(varphi(phi(identity, target), target) == identity);
}
