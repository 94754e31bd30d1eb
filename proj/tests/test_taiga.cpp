#include <functional>
#include <unordered_map>

#include "doctest.h"
#include "plactic/monoid.hpp"
#include "plactic/stalactic.hpp"
#include "plactic/taiga.hpp"
#include "test_support.hpp"

using namespace plactic;
using taig::TaigaTree;
using taig::TElement;

namespace {

using Node = TaigaTree::Node;

std::unique_ptr<Node> node(Symbol label, int mult,
                           std::unique_ptr<Node> left = nullptr,
                           std::unique_ptr<Node> right = nullptr) {
  auto n = TaigaTree::make_node({label, mult});
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

TaigaTree tree(std::unique_ptr<Node> root) {
  TaigaTree t;
  t.root_slot() = std::move(root);
  return t;
}

const Node* find_label(const Node* n, Symbol x) {
  if (!n) return nullptr;
  if (n->data.label == x) return n;
  return x < n->data.label ? find_label(n->left.get(), x)
                           : find_label(n->right.get(), x);
}

bool in_subtree_of(const TaigaTree& t, Symbol i, Symbol j) {
  const Node* nj = find_label(t.root(), j);
  return nj && (find_label(nj->left.get(), i) || find_label(nj->right.get(), i));
}

}  // namespace

TEST_SUITE_BEGIN("taiga");

TEST_CASE("insert cases") {
  TaigaTree t;
  t = taig::insert(t, 4);
  CHECK(t == tree(node(4, 1)));
  t = taig::insert(t, 4);
  CHECK(t == tree(node(4, 2)));
  TaigaTree u = taig::insert(tree(node(4, 1)), 2);
  CHECK(u == tree(node(4, 1, node(2, 1))));
}

TEST_CASE("tree_of on small words") {
  CHECK(taig::tree_of({}).empty());
  CHECK(taig::tree_of(parse_word("4254")) ==
        tree(node(4, 2, node(2, 1), node(5, 1))));
}

TEST_CASE("tree_of the eleven-letter example") {
  // inserting right to left gives one '4' at the root, multiplicity 1
  auto expected = tree(node(
      4, 1, node(2, 1, node(1, 2), node(3, 1)),
      node(5, 3, nullptr, node(6, 2, nullptr, node(7, 1)))));
  CHECK(taig::tree_of(parse_word("65117563254")) == expected);
}

TEST_CASE("equivalent") {
  CHECK_FALSE(taig::equivalent(parse_word("45"), parse_word("54")));
  CHECK(taig::equivalent(parse_word("44"), parse_word("44")));
  CHECK(taig::equivalent(parse_word("121"), parse_word("211")));
}

TEST_CASE("subtree_pair") {
  CHECK(taig::subtree_pair(parse_word("12"), 1, 2));
  CHECK_FALSE(taig::subtree_pair(parse_word("21"), 1, 2));
  CHECK_FALSE(taig::subtree_pair(parse_word("132"), 1, 3));  // suffix has 2
  CHECK_THROWS_AS(taig::subtree_pair(parse_word("12"), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("subtree_pair matches the tree structure") {
  for_each_word(4, 5, [&](const Word& w) {
    auto t = taig::tree_of(w);
    auto supp = support(w);
    for (Symbol i = 1; i <= 4; ++i)
      for (Symbol j = 1; j <= 4; ++j) {
        if (i == j || !supp.count(i) || !supp.count(j)) continue;
        REQUIRE(taig::subtree_pair(w, i, j) == in_subtree_of(t, i, j));
      }
  });
}

TEST_CASE("pair_matrix on examples") {
  CHECK(taig::pair_matrix<Natural>({}, 1, 2) ==
        taig::element_matrix<Natural>(TElement::E));
  CHECK(taig::pair_matrix<Natural>(parse_word("12"), 1, 2) ==
        taig::element_matrix<Natural>(TElement::L));
  CHECK(taig::element_matrix<Natural>(TElement::I) *
            taig::element_matrix<Natural>(TElement::J) ==
        taig::element_matrix<Natural>(TElement::L));
  CHECK_THROWS_AS(taig::pair_matrix<Natural>(parse_word("12"), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("multiplication table matches the expected five-element table") {
  using T = TElement;
  auto table = taig::multiplication_table();
  // rows and columns in the order E, K, J, I, L
  const std::array<std::array<T, 5>, 5> expected{{
      {T::E, T::K, T::J, T::I, T::L},
      {T::K, T::K, T::J, T::I, T::L},
      {T::J, T::K, T::J, T::I, T::L},
      {T::I, T::I, T::L, T::I, T::L},
      {T::L, T::I, T::L, T::I, T::L},
  }};
  CHECK(table == expected);
}

TEST_CASE("pair_matrix image stays in the five-element set") {
  for_each_word(4, 6, [&](const Word& w) {
    for (auto [i, j] : {std::pair<Symbol, Symbol>{2, 4}, {4, 2}, {1, 2}}) {
      Matrix<Natural> m = taig::pair_matrix<Natural>(w, i, j);
      bool known = false;
      for (TElement e : taig::kTElements)
        if (m == taig::element_matrix<Natural>(e)) known = true;
      REQUIRE(known);
    }
  });
}

TEST_CASE("pair_matrix equals L exactly when subtree_pair") {
  for_each_word(4, 6, [&](const Word& w) {
    for (auto [i, j] : {std::pair<Symbol, Symbol>{2, 4}, {4, 2}}) {
      bool is_l = taig::pair_matrix<Natural>(w, i, j) ==
                  taig::element_matrix<Natural>(TElement::L);
      REQUIRE(is_l == taig::subtree_pair(w, i, j));
    }
  });
}

TEST_CASE("equality criterion: content plus subtree data over ordered pairs") {
  for (int rank = 1; rank <= 3; ++rank) {
    std::unordered_map<std::string, std::string> crit_to_canon, canon_to_crit;
    for_each_word(rank, 6, [&](const Word& w) {
      std::string crit;
      const Content ev = content(w);
      for (const auto& [sym, cnt] : ev.counts())
        crit += std::to_string(sym) + ":" + std::to_string(cnt) + ",";
      crit += "|";
      for (Symbol i = 1; i <= rank; ++i)
        for (Symbol j = 1; j <= rank; ++j)
          if (i != j) crit += taig::subtree_pair(w, i, j) ? '1' : '0';
      std::string canon = canonical_key(MonoidTag::Taig, w);
      auto [ci, cn] = crit_to_canon.emplace(crit, canon);
      REQUIRE(ci->second == canon);
      auto [ai, an] = canon_to_crit.emplace(canon, crit);
      REQUIRE(ai->second == crit);
    });
  }
}

TEST_CASE("faithfulness: tree equality vs matrix equality") {
  for (int rank = 1; rank <= 3; ++rank)
    for (SemiringTag s : {SemiringTag::Tropical, SemiringTag::Natural}) {
      auto report = faithfulness_scan(MonoidTag::Taig, rank, 6, s);
      CHECK(report.violations == 0);
    }
}

TEST_CASE("stalactic equality implies taiga equality") {
  std::unordered_map<std::string, std::string> stal_to_taig;
  for_each_word(3, 5, [&](const Word& w) {
    auto [it, fresh] = stal_to_taig.emplace(canonical_key(MonoidTag::Stal, w),
                                            canonical_key(MonoidTag::Taig, w));
    REQUIRE(it->second == canonical_key(MonoidTag::Taig, w));
  });
}

TEST_CASE("representation shape") {
  CHECK(taig::representation<Tropical>(parse_word("12"), 2).dim() == 8);
  CHECK(taig::representation<Tropical>(parse_word("123"), 3).dim() == 21);
  auto id = taig::representation<Natural>({}, 3);
  for (const auto& b : id.blocks) CHECK(b == Matrix<Natural>::identity(b.dim()));
}

TEST_CASE("trees are valid search trees with multiplicities") {
  std::mt19937 rng(71);
  for (int t = 0; t < 300; ++t) {
    Word w = testsupport::random_word(rng, 6, 15);
    CHECK(taig::valid(taig::tree_of(w)));
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(73);
  for (int t = 0; t < 50; ++t) {
    auto t1 = taig::tree_of(testsupport::random_word(rng, 6, 12));
    CHECK(taig::tree_from_json(taig::to_json(t1)) == t1);
  }
}

TEST_SUITE_END();
