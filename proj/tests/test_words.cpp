#include <algorithm>

#include "doctest.h"
#include "plactic/word.hpp"
#include "test_support.hpp"

using namespace plactic;

TEST_SUITE_BEGIN("words");

TEST_CASE("content counts occurrences") {
  CHECK(content({}).counts().empty());
  CHECK(content({}).total() == 0);
  CHECK(content(parse_word("121")).counts() ==
        std::map<Symbol, int>{{1, 2}, {2, 1}});
  // cross-checked against the stalactic column multiplicities of the same word
  CHECK(content(parse_word("361135112565")).counts() ==
        std::map<Symbol, int>{{1, 4}, {2, 1}, {3, 2}, {5, 3}, {6, 2}});
}

TEST_CASE("support") {
  CHECK(support({}).empty());
  CHECK(support(parse_word("121")) == std::set<Symbol>{1, 2});
  CHECK(support(parse_word("5451761524")) == std::set<Symbol>{1, 2, 4, 5, 6, 7});
}

TEST_CASE("sigma_order ranks by first occurrence from the right") {
  // dfeebdbf with a..f encoded as 1..6
  CHECK(sigma_order(parse_word("46552426")) ==
        std::map<Symbol, int>{{2, 2}, {4, 3}, {5, 4}, {6, 1}});
  CHECK(sigma_order(parse_word("3")) == std::map<Symbol, int>{{3, 1}});
  CHECK(sigma_order(parse_word("121")) == std::map<Symbol, int>{{1, 1}, {2, 2}});
  CHECK(sigma_order({}).empty());
}

TEST_CASE("sigma_order ignores non-rightmost occurrences") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Word w = testsupport::random_word(rng, 4, 12);
    auto sigma = sigma_order(w);
    for (std::size_t p = 0; p < w.size(); ++p) {
      bool rightmost = std::find(w.begin() + static_cast<long>(p) + 1, w.end(),
                                 w[p]) == w.end();
      if (rightmost) continue;
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(p));
      CHECK(sigma_order(shorter) == sigma);
    }
  }
}

TEST_CASE("scattered_subwords") {
  CHECK(scattered_subwords(parse_word("12"), 2) ==
        std::set<Word>{{1}, {2}, {1, 2}});
  CHECK(scattered_subwords({}, 2).empty());
  CHECK(scattered_subwords(parse_word("121"), 2) ==
        std::set<Word>{{1}, {2}, {1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("scattered_subwords agrees with brute enumeration") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Word w = testsupport::random_word(rng, 3, 9);
    for (int k : {1, 2, 3, 4})
      CHECK(scattered_subwords(w, k) == testsupport::brute_subwords(w, k));
  }
}

TEST_CASE("contains_scattered") {
  CHECK_FALSE(contains_scattered(parse_word("12"), parse_word("21")));
  CHECK(contains_scattered(parse_word("121"), parse_word("21")));
  CHECK(contains_scattered(parse_word("361135112565"), parse_word("65")));
  CHECK(contains_scattered(parse_word("12"), {}));
}

TEST_CASE("contains_scattered matches subword-set membership") {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    Word w = testsupport::random_word(rng, 3, 8);
    Word p = testsupport::random_word(rng, 3, 3, 1);
    auto subs = scattered_subwords(w, 3);
    CHECK(contains_scattered(w, p) == (subs.count(p) > 0));
  }
}

TEST_CASE("reversed") {
  CHECK(reversed({}).empty());
  CHECK(reversed(parse_word("12")) == parse_word("21"));
  // xyzxty reversed is ytxzyx, with x,y,z,t as 1,2,3,4
  CHECK(reversed(Word{1, 2, 3, 1, 4, 2}) == Word{2, 4, 1, 3, 2, 1});
}

TEST_CASE("enumerate_words order and counts") {
  CHECK(enumerate_words(1, 1) == std::vector<Word>{{}, {1}});
  CHECK(enumerate_words(2, 1) == std::vector<Word>{{}, {1}, {2}});
  auto words22 = enumerate_words(2, 2);
  CHECK(words22.size() == 7);
  CHECK(words22 == std::vector<Word>{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});

  for (int n : {2, 3})
    for (int len = 0; len <= 5; ++len) {
      std::uint64_t expect = 0, pw = 1;
      for (int l = 0; l <= len; ++l, pw *= static_cast<std::uint64_t>(n))
        expect += pw;
      CHECK(enumerate_words(n, len).size() == expect);
    }
}

TEST_CASE("enumerate_words yields every word exactly once") {
  auto words = enumerate_words(3, 4);
  std::set<Word> distinct(words.begin(), words.end());
  CHECK(distinct.size() == words.size());
}

TEST_CASE("content total and support consistency") {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    Word w = testsupport::random_word(rng, 5, 12);
    Content c = content(w);
    CHECK(c.total() == static_cast<int>(w.size()));
    std::set<Symbol> keys;
    for (const auto& [sym, cnt] : c.counts()) {
      CHECK(cnt > 0);
      keys.insert(sym);
    }
    CHECK(keys == support(w));
  }
}

TEST_CASE("word text syntax") {
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("312") == Word{3, 1, 2});
  CHECK(parse_word("3,1,2") == Word{3, 1, 2});
  CHECK(parse_word("10,2") == Word{10, 2});
  CHECK(parse_word("10") == Word{10});  // not all digits 1-9, so one integer
  CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a"), std::invalid_argument);
  CHECK(format_word({3, 1, 2}) == "3,1,2");
  CHECK(format_word({}) == "");
  CHECK(parse_word(format_word({10, 2})) == Word{10, 2});
  CHECK(parse_word(format_word({12, 11})) == Word{12, 11});
  std::mt19937 rng(19);
  for (int t = 0; t < 50; ++t) {
    Word w = testsupport::random_word(rng, 9, 9);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_SUITE_END();
