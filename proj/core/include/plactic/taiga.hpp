// Binary search trees with multiplicities, the taiga congruence, and its
// representation: a content block plus one 3x3 block per ordered pair of
// distinct symbols.  The 3x3 blocks land in a five-element monoid.
#pragma once

#include <array>
#include <nlohmann/json.hpp>

#include "plactic/matrix.hpp"
#include "plactic/tree.hpp"
#include "plactic/word.hpp"

namespace plactic::taig {

struct NodeData {
  Symbol label;
  int multiplicity;
  friend bool operator==(const NodeData&, const NodeData&) = default;
};

using TaigaTree = BinaryTree<NodeData>;

/// Strict search-tree shape (left < node < right, labels distinct) with
/// positive multiplicities.
bool valid(const TaigaTree& t);

/// Standard strict BST descent; an equal label increments the node's
/// multiplicity instead of adding a vertex.
TaigaTree insert(TaigaTree t, Symbol a);

/// Right-to-left insertion of the whole word, starting from empty.
TaigaTree tree_of(const Word& w);

bool equivalent(const Word& u, const Word& v);

/// The pair datum of the congruence: w factors as (.. i .. j tail) where
/// the tail avoids every symbol between i and j inclusive.  Equivalently,
/// i ends up in a subtree of j.  Requires i != j.
bool subtree_pair(const Word& w, Symbol i, Symbol j);

enum class TElement { E, K, J, I, L };
inline constexpr std::array<TElement, 5> kTElements{
    TElement::E, TElement::K, TElement::J, TElement::I, TElement::L};
const char* to_string(TElement e);

template <Semiring S>
Matrix<S> element_matrix(TElement e) {
  Matrix<S> m(3);
  switch (e) {
    case TElement::E:
      return Matrix<S>::identity(3);
    case TElement::K:
      m.at(0, 0) = S::one();
      m.at(1, 1) = S::one();
      return m;
    case TElement::J:
      m.at(0, 0) = S::one();
      m.at(1, 1) = S::one();
      m.at(1, 2) = S::one();
      return m;
    case TElement::I:
      m.at(0, 0) = S::one();
      m.at(0, 1) = S::one();
      return m;
    case TElement::L:
      m.at(0, 0) = S::one();
      m.at(0, 1) = S::one();
      m.at(0, 2) = S::one();
      return m;
  }
  return m;
}

/// Image of w in the (i, j) block: i -> I, j -> J, strictly between -> K,
/// everything else -> E.  Both orders i < j and i > j are allowed; the
/// between-interval is order-normalized.  Requires i != j.
template <Semiring S>
Matrix<S> pair_matrix(const Word& w, Symbol i, Symbol j) {
  if (i == j) throw std::invalid_argument("pair_matrix requires i != j");
  const Symbol lo = i < j ? i : j, hi = i < j ? j : i;
  Matrix<S> acc = Matrix<S>::identity(3);
  for (Symbol a : w) {
    TElement e = TElement::E;
    if (a == i)
      e = TElement::I;
    else if (a == j)
      e = TElement::J;
    else if (a > lo && a < hi)
      e = TElement::K;
    if (e != TElement::E) acc = acc * element_matrix<S>(e);
  }
  return acc;
}

/// 5x5 table in the element order E, K, J, I, L, computed from the
/// concrete matrices over the naturals.
std::array<std::array<TElement, 5>, 5> multiplication_table();

/// Content block plus all ordered pairs (i, j), i != j, row-major;
/// total dimension 3*rank^2 - 2*rank.
template <Semiring S>
BlockDiag<S> representation(const Word& w, int rank) {
  BlockDiag<S> m;
  m.blocks.push_back(content_rep<S>(w, rank));
  for (Symbol i = 1; i <= rank; ++i)
    for (Symbol j = 1; j <= rank; ++j)
      if (i != j) m.blocks.push_back(pair_matrix<S>(w, i, j));
  return m;
}

nlohmann::json to_json(const TaigaTree& t);
TaigaTree tree_from_json(const nlohmann::json& j);

}  // namespace plactic::taig
