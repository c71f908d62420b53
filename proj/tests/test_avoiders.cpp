#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "permstat/avoiders.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

namespace {

const std::vector<std::string> kSigmas = {"123", "132", "213",
                                          "231", "312", "321"};

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(14) == 2674440);
  for (int n = 0; n <= 30; ++n)
    CHECK(catalan(n) == oracle::catalan_by_binomial(n));
  CHECK_THROWS_AS(catalan(31), std::domain_error);
  CHECK_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("class parsing") {
  const AvoiderClass c = AvoiderClass::parse("S(8,213)");
  CHECK(c.n == 8);
  CHECK(c.sigma == Word::parse("213"));
  CHECK(c.str() == "S(8,213)");
  CHECK(AvoiderClass::parse("S( 12 , 231 )").n == 12);
  CHECK_THROWS_AS(AvoiderClass::parse("S(8)"), std::invalid_argument);
  CHECK_THROWS_AS(AvoiderClass::parse("T(8,213)"), std::invalid_argument);
  CHECK_THROWS_AS(AvoiderClass::parse("S(8,213"), std::invalid_argument);
  CHECK_THROWS_AS(AvoiderClass::parse("S(x,213)"), std::invalid_argument);
  CHECK_THROWS_AS(AvoiderClass::parse("S(8,2134)"), std::domain_error);
  CHECK_THROWS_AS(AvoiderClass::parse("S(8,212)"), std::invalid_argument);
}

TEST_CASE("method selection") {
  CHECK(structured_supported(Word::parse("213")));
  CHECK(structured_supported(Word::parse("231")));
  CHECK_FALSE(structured_supported(Word::parse("132")));
  CHECK(default_method(Word::parse("213")) == EnumMethod::structured);
  CHECK(default_method(Word::parse("321")) == EnumMethod::filter);
  CHECK_THROWS_AS(for_each_avoider(AvoiderClass(3, Word::parse("321")),
                                   EnumMethod::structured,
                                   [](const Word&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("small classes are exactly right") {
  CHECK(list_avoiders(AvoiderClass(3, Word::parse("213")),
                      EnumMethod::filter) ==
        std::vector<Word>{Word::parse("123"), Word::parse("132"),
                          Word::parse("231"), Word::parse("312"),
                          Word::parse("321")});
  CHECK(list_avoiders(AvoiderClass(3, Word::parse("213")),
                      EnumMethod::structured) ==
        list_avoiders(AvoiderClass(3, Word::parse("213")),
                      EnumMethod::filter));
  // the empty class member
  const auto empty_class =
      list_avoiders(AvoiderClass(0, Word::parse("231")), EnumMethod::filter);
  REQUIRE(empty_class.size() == 1);
  CHECK(empty_class[0].empty());
  CHECK(list_avoiders(AvoiderClass(4, Word::parse("231")),
                      EnumMethod::structured)
            .size() == 14);
}

TEST_CASE("filter and structured streams are identical") {
  for (const char* sigma : {"213", "231"}) {
    for (int n = 0; n <= 9; ++n) {
      const AvoiderClass c(n, Word::parse(sigma));
      CHECK(list_avoiders(c, EnumMethod::filter) ==
            list_avoiders(c, EnumMethod::structured));
    }
  }
}

TEST_CASE("streams are lexicographic, duplicate-free, avoiding, complete") {
  for (const auto& sigma_text : kSigmas) {
    const Word sigma = Word::parse(sigma_text);
    for (int n = 0; n <= 7; ++n) {
      const AvoiderClass c(n, sigma);
      const auto members = list_avoiders(c, default_method(sigma));
      CHECK(static_cast<std::int64_t>(members.size()) == catalan(n));
      CHECK(std::is_sorted(members.begin(), members.end()));
      CHECK(std::adjacent_find(members.begin(), members.end()) ==
            members.end());
      for (const Word& w : members) {
        CHECK(avoids(w, sigma));
        CHECK(w.is_standard());
        CHECK(w.size() == n);
      }
    }
  }
}

TEST_CASE("first-letter partitions reassemble the stream") {
  for (const char* sigma : {"213", "231", "132"}) {
    const AvoiderClass c(6, Word::parse(sigma));
    const EnumMethod m = default_method(c.sigma);
    std::vector<Word> glued;
    for (Letter k = 1; k <= 6; ++k)
      for_each_avoider_first(c, m, k, [&](const Word& w) {
        CHECK(first_letter(w) == k);
        glued.push_back(w);
        return true;
      });
    CHECK(glued == list_avoiders(c, m));
  }
  CHECK_THROWS_AS(for_each_avoider_first(AvoiderClass(3, Word::parse("213")),
                                         EnumMethod::structured, 4,
                                         [](const Word&) { return true; }),
                  std::domain_error);
}

TEST_CASE("visitors can stop a stream early") {
  int seen = 0;
  const bool finished = for_each_avoider(
      AvoiderClass(6, Word::parse("213")), EnumMethod::structured,
      [&](const Word&) { return ++seen < 10; });
  CHECK_FALSE(finished);
  CHECK(seen == 10);
}

TEST_CASE("full S_n enumeration") {
  int count = 0;
  for_each_permutation(4, [&](const Word&) {
    ++count;
    return true;
  });
  CHECK(count == 24);
  std::vector<Word> glued;
  for (Letter k = 1; k <= 4; ++k)
    for_each_permutation_first(4, k, [&](const Word& w) {
      glued.push_back(w);
      return true;
    });
  CHECK(glued == oracle::all_permutations(4));
  int empties = 0;
  for_each_permutation(0, [&](const Word& w) {
    CHECK(w.empty());
    ++empties;
    return true;
  });
  CHECK(empties == 1);
}

TEST_CASE("joint distribution") {
  using Row = std::vector<std::int64_t>;
  CHECK(joint_distribution(AvoiderClass(3, Word::parse("213")),
                           {"maj", "des"}) ==
        std::vector<Row>{{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 2}});
  CHECK(joint_distribution(AvoiderClass(1, Word::parse("123")), {"maj"}) ==
        std::vector<Row>{{0}});
  CHECK_THROWS_AS(joint_distribution(AvoiderClass(2, Word::parse("213")), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      joint_distribution(AvoiderClass(2, Word::parse("213")), {"bogus"}),
      std::invalid_argument);
}

TEST_CASE("the maj<->stat swap relates the two class quintuples") {
  // joint profiles over S_n(213) match those over S_n(231) after swapping
  // the maj and stat coordinates
  for (int n = 1; n <= 6; ++n) {
    auto lhs = joint_distribution(AvoiderClass(n, Word::parse("213")),
                                  {"F", "maj", "stat", "des", "ides"});
    auto rhs = joint_distribution(AvoiderClass(n, Word::parse("231")),
                                  {"F", "stat", "maj", "des", "ides"});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("descents equal inverse descents on both classes") {
  for (const char* sigma : {"213", "231"}) {
    for (int n = 0; n <= 10; ++n) {
      for_each_avoider(AvoiderClass(n, Word::parse(sigma)),
                       EnumMethod::structured, [](const Word& w) {
                         CHECK(descent_number(w) ==
                               inverse_descent_number(w));
                         return true;
                       });
    }
  }
}

TEST_CASE("inverse descent positions of a 213 avoider") {
  // with D(w) = {j_1 < ... < j_r}, r >= 1, the inverse's descent set is
  // {w_n} together with {w_{j_2}, ..., w_{j_r}}
  for (int n = 1; n <= 10; ++n) {
    for_each_avoider(
        AvoiderClass(n, Word::parse("213")), EnumMethod::structured,
        [&](const Word& w) {
          const std::vector<int> d = descent_set(w);
          std::set<int> expected;
          if (!d.empty()) {
            expected.insert(w.letters().back());
            for (size_t i = 1; i < d.size(); ++i)
              expected.insert(w.letters()[d[i] - 1]);
          }
          const Word inv = transform(w, Symmetry::inverse);
          std::set<int> actual;
          for (int pos : descent_set(inv)) actual.insert(pos);
          CHECK(actual == expected);
          return true;
        });
  }
}
