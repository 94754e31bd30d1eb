#include "doctest.h"
#include "plactic/presentations.hpp"
#include "test_support.hpp"

using namespace plactic;
using pres::Family;

TEST_SUITE_BEGIN("presentations");

TEST_CASE("neighbors on schema instances") {
  CHECK(pres::neighbors(Family::Stal, parse_word("121"), 2).count(parse_word("211")));
  CHECK(pres::neighbors(Family::Hypo, parse_word("132"), 3).count(parse_word("312")));
  CHECK(pres::neighbors(Family::Hypo, parse_word("11"), 2).empty());
  CHECK(pres::neighbors(Family::Sylv, parse_word("132"), 3).count(parse_word("312")));
  CHECK(pres::neighbors(Family::SylvSharp, parse_word("213"), 3).count(parse_word("231")));
  CHECK_THROWS_AS(pres::neighbors(Family::Stal, parse_word("3"), 2),
                  std::invalid_argument);
}

TEST_CASE("neighbor relation is symmetric and content preserving") {
  std::mt19937 rng(157);
  for (Family f : {Family::Hypo, Family::Stal, Family::Sylv, Family::SylvSharp})
    for (int t = 0; t < 150; ++t) {
      Word w = testsupport::random_word(rng, 3, 6);
      for (const Word& v : pres::neighbors(f, w, 3)) {
        CHECK(content(v) == content(w));
        CHECK(pres::neighbors(f, v, 3).count(w));
      }
    }
}

TEST_CASE("congruence classes") {
  auto cls = pres::congruence_class(Family::Stal, parse_word("121"), 2);
  CHECK(cls.count(parse_word("121")));
  CHECK(cls.count(parse_word("211")));
  CHECK(pres::congruence_class(Family::Hypo, parse_word("1"), 2) ==
        std::set<Word>{parse_word("1")});
}

TEST_CASE("classes never cross canonical forms") {
  std::mt19937 rng(163);
  for (Family f : {Family::Hypo, Family::Stal, Family::Sylv, Family::SylvSharp}) {
    MonoidTag tag = pres::monoid_of(f);
    for (int t = 0; t < 50; ++t) {
      Word w = testsupport::random_word(rng, 3, 5);
      for (const Word& v : pres::congruence_class(f, w, 3))
        CHECK(monoid_equivalent(tag, w, v));
    }
  }
}

TEST_CASE("presentations match the insertion algorithms") {
  CHECK(pres::matches_canonical(Family::Hypo, 3, 5).match);
  CHECK(pres::matches_canonical(Family::Stal, 3, 5).match);
  CHECK(pres::matches_canonical(Family::Sylv, 2, 6).match);
  CHECK(pres::matches_canonical(Family::SylvSharp, 2, 6).match);
}

TEST_CASE("each stalactic class contains exactly one run-grouped word") {
  // the normal form lists each support symbol's occurrences contiguously,
  // ordered by decreasing right-to-left first-occurrence rank
  for_each_word(3, 5, [&](const Word& w) {
    auto sigma = sigma_order(w);
    Content ev = content(w);
    Word normal;
    for (int r = static_cast<int>(sigma.size()); r >= 1; --r) {
      Symbol sym = 0;
      for (const auto& [s, rank] : sigma)
        if (rank == r) sym = s;
      normal.insert(normal.end(), static_cast<std::size_t>(ev.count(sym)), sym);
    }
    auto cls = pres::congruence_class(Family::Stal, w, 3);
    REQUIRE(cls.count(normal) == 1);

    auto run_grouped = [](const Word& v) {
      std::set<Symbol> closed;  // symbols whose run has ended
      for (std::size_t p = 0; p < v.size(); ++p) {
        if (closed.count(v[p])) return false;
        if (p + 1 < v.size() && v[p + 1] != v[p]) closed.insert(v[p]);
      }
      return true;
    };
    int grouped = 0;
    for (const Word& v : cls)
      if (run_grouped(v)) ++grouped;
    REQUIRE(grouped == 1);
  });
}

TEST_SUITE_END();
