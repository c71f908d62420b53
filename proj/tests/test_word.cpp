#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "permstat/stats.hpp"
#include "permstat/word.hpp"

using namespace permstat;

TEST_CASE("word parsing accepts both canonical forms") {
  CHECK(Word::parse("25678341").letters() ==
        std::vector<Letter>{2, 5, 6, 7, 8, 3, 4, 1});
  CHECK(Word::parse("12,3,7").letters() == std::vector<Letter>{12, 3, 7});
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("  21 ").letters() == std::vector<Letter>{2, 1});
}

TEST_CASE("word parsing rejects malformed input") {
  CHECK_THROWS_AS(Word::parse("120"), std::invalid_argument);  // digit 0
  CHECK_THROWS_AS(Word::parse("11"), std::invalid_argument);   // repeat
  CHECK_THROWS_AS(Word::parse("3,3"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<Letter>{1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<Letter>{0, 1}), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(Word::parse("25678341").str() == "25678341");
  CHECK(Word::parse("12,3,7").str() == "12,3,7");
  CHECK(Word::parse("9,10").str() == "9,10");
  CHECK(Word().str() == "");
}

TEST_CASE("1-based access and bounds") {
  const Word w = Word::parse("312");
  CHECK(w.at(1) == 3);
  CHECK(w.at(3) == 2);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(4), std::out_of_range);
}

TEST_CASE("is_standard distinguishes ground sets") {
  CHECK(Word::parse("312").is_standard());
  CHECK(Word().is_standard());
  CHECK_FALSE(Word::parse("93175").is_standard());
}

TEST_CASE("ground set construction, rank and select") {
  const GroundSet s = GroundSet::parse("9,3,1,7,5");
  CHECK(s.elements() == std::vector<Letter>{1, 3, 5, 7, 9});
  CHECK(s.at(1) == 1);
  CHECK(s.at(5) == 9);
  CHECK(s.rank(7) == 4);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(4));
  CHECK_THROWS_AS(s.rank(4), std::domain_error);
  CHECK_THROWS_AS(s.at(6), std::out_of_range);
  CHECK_THROWS_AS(GroundSet::parse("3,3"), std::invalid_argument);
  CHECK(GroundSet::interval(3, 5).elements() == std::vector<Letter>{3, 4, 5});
  CHECK(GroundSet::interval(5, 3).empty());
  CHECK(GroundSet::of(Word::parse("63542")).elements() ==
        std::vector<Letter>{2, 3, 4, 5, 6});
}

TEST_CASE("standardize ranks letters") {
  CHECK(standardize(Word::parse("93175")) == Word::parse("52143"));
  CHECK(standardize(Word::parse("63542")) == Word::parse("52431"));
  CHECK(standardize(Word()).empty());
  // fixed point on permutations of {1,...,n}
  for (const Word& p : oracle::all_permutations(4))
    CHECK(standardize(p) == p);
}

TEST_CASE("transform golden values") {
  CHECK(transform(Word::parse("7356412"), Symmetry::complement) ==
        Word::parse("1532476"));
  CHECK(transform(Word::parse("123"), Symmetry::reverse) == Word::parse("321"));
  CHECK(transform(Word::parse("25678341"), Symmetry::inverse) ==
        Word::parse("81672345"));
  CHECK_THROWS_AS(transform(Word::parse("93175"), Symmetry::complement),
                  std::domain_error);
  CHECK_THROWS_AS(transform(Word::parse("93175"), Symmetry::inverse),
                  std::domain_error);
  // reverse works on arbitrary words
  CHECK(transform(Word::parse("93175"), Symmetry::reverse) ==
        Word::parse("57139"));
}

TEST_CASE("symmetries are involutions and commute as expected") {
  for (const Word& p : oracle::all_permutations(6)) {
    CHECK(transform(transform(p, Symmetry::complement), Symmetry::complement) ==
          p);
    CHECK(transform(transform(p, Symmetry::reverse), Symmetry::reverse) == p);
    CHECK(transform(transform(p, Symmetry::inverse), Symmetry::inverse) == p);
    // inverse of the complement is the reverse of the inverse
    CHECK(transform(transform(p, Symmetry::complement), Symmetry::inverse) ==
          transform(transform(p, Symmetry::inverse), Symmetry::reverse));
  }
}

TEST_CASE("standardize preserves the positional structure") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = oracle::random_word(rng, 1 + trial % 12, 40);
    const Word s = standardize(w);
    CHECK(descent_set(s) == descent_set(w));
    CHECK(inversion_number(s) == inversion_number(w));
    CHECK(major_index(s) == major_index(w));
    const auto runs_w = runs(w);
    const auto runs_s = runs(s);
    REQUIRE(runs_w.size() == runs_s.size());
    for (size_t i = 0; i < runs_w.size(); ++i)
      CHECK(runs_w[i].size() == runs_s[i].size());
  }
}

TEST_CASE("words order lexicographically") {
  CHECK(Word::parse("123") < Word::parse("132"));
  CHECK(Word::parse("21") < Word::parse("213"));
  CHECK(Word() < Word::parse("1"));
}
