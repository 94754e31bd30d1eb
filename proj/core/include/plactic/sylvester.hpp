// Right- and left-strict binary search trees, the sylvester and
// #-sylvester congruences, the Baxter pair of a word, and the
// block-diagonal representations of all three monoids.  The 2x2 blocks of
// the sylvester representation land in the infinite monoid of elements
// J^k and I*J^k; the #-sylvester blocks are obtained from the sylvester
// ones by the reverse-relabel anti-isomorphism plus a transpose.
#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "plactic/matrix.hpp"
#include "plactic/tree.hpp"
#include "plactic/word.hpp"

namespace plactic::sylv {

using Bst = BinaryTree<Symbol>;       // right strict: left <= node < right
using BstSharp = BinaryTree<Symbol>;  // left strict:  left < node <= right

bool valid_right_strict(const Bst& t);
bool valid_left_strict(const BstSharp& t);

/// Leaf insertion; descends left on a <= x, right otherwise.
Bst insert_right_strict(Bst t, Symbol a);
/// Leaf insertion; descends right on a >= x, left otherwise.
BstSharp insert_left_strict(BstSharp t, Symbol a);

/// Right-to-left insertion of the whole word into a right strict tree.
Bst right_tree_of(const Word& w);
/// Left-to-right insertion of the whole word into a left strict tree.
BstSharp left_tree_of(const Word& w);

bool equivalent(const Word& u, const Word& v);        // sylvester
bool sharp_equivalent(const Word& u, const Word& v);  // #-sylvester

struct BaxterPair {
  BstSharp left_tree;
  Bst right_tree;
  friend bool operator==(const BaxterPair&, const BaxterPair&) = default;
};

BaxterPair baxter_pair_of(const Word& w);
bool baxter_equivalent(const Word& u, const Word& v);

/// Letterwise projection onto the rank-2 alphabet: i -> 1, j -> 2,
/// strictly between -> 21, everything else erased.  Requires i < j.
Word rank2_image(const Word& w, Symbol i, Symbol j);

/// Element of the monoid generated by I and J subject to JI = I = I^2:
/// J^power when has_i is false, I*J^power when it is true.
struct MElement {
  bool has_i = false;
  std::uint64_t power = 0;
  friend bool operator==(const MElement&, const MElement&) = default;
};

/// Canonical element of a rank-2 word: J^{count of 2} if no 1 occurs,
/// otherwise I*J^{trailing 2s}.
MElement canonical_m(const Word& w2);
MElement m_multiply(const MElement& a, const MElement& b);

template <Semiring S>
Matrix<S> m_matrix(const MElement& e) {
  Matrix<S> m(2);
  m.at(0, 0) = S::one();
  if (e.has_i)
    m.at(0, 1) = alpha_pow<S>(e.power);
  else
    m.at(1, 1) = alpha_pow<S>(e.power);
  return m;
}

/// Product of the letter images 1 -> I = [[1,1],[0,0]] and
/// 2 -> J = [[1,0],[0,alpha]] over a rank-2 word.
template <Semiring S>
Matrix<S> rank2_matrix(const Word& w2) {
  Matrix<S> acc = Matrix<S>::identity(2);
  for (Symbol a : w2) {
    Matrix<S> g(2);
    g.at(0, 0) = S::one();
    if (a == 1)
      g.at(0, 1) = S::one();
    else if (a == 2)
      g.at(1, 1) = S::alpha();
    else
      throw std::invalid_argument("rank2_matrix expects symbols 1 and 2");
    acc = acc * g;
  }
  return acc;
}

/// The unique exponents (a, b, c) with w2 sylvester-equivalent to
/// 2^a 1^b 2^c, found by search over the content-compatible candidates.
struct Rank2NormalForm {
  std::uint64_t a = 0, b = 0, c = 0;
  friend bool operator==(const Rank2NormalForm&, const Rank2NormalForm&) = default;
};
Rank2NormalForm rank2_normal_form(const Word& w2);
Word rank2_normal_word(const Rank2NormalForm& nf);

/// Content block plus rank2_matrix(rank2_image(w, i, j)) for i < j;
/// total dimension rank^2.
template <Semiring S>
BlockDiag<S> representation(const Word& w, int rank) {
  BlockDiag<S> m;
  m.blocks.push_back(content_rep<S>(w, rank));
  for (Symbol i = 1; i <= rank; ++i)
    for (Symbol j = i + 1; j <= rank; ++j)
      m.blocks.push_back(rank2_matrix<S>(rank2_image(w, i, j)));
  return m;
}

/// Reverse the word and replace each symbol x by rank+1-x.  This is an
/// anti-morphism exchanging the sylvester and #-sylvester congruences.
Word dual_word(const Word& w, int rank);

/// #-sylvester representation: apply the sylvester representation to
/// dual_word(w), transpose every block, flip the 2x2 blocks about the
/// antidiagonal, and re-sort the diagonal block so it is exactly the
/// content block of w.  Letter images at rank 2 are I# = [[alpha,0],[0,1]]
/// and J# = [[0,1],[0,1]].
template <Semiring S>
BlockDiag<S> sharp_representation(const Word& w, int rank) {
  BlockDiag<S> src = representation<S>(dual_word(w, rank), rank);
  BlockDiag<S> out;
  Matrix<S> diag = Matrix<S>::identity(rank);
  for (int x = 0; x < rank; ++x)
    diag.at(x, x) = src.blocks[0].at(rank - 1 - x, rank - 1 - x);
  out.blocks.push_back(std::move(diag));
  for (std::size_t b = 1; b < src.blocks.size(); ++b) {
    // transpose followed by the antidiagonal flip: the diagonal entries
    // swap, the off-diagonal entries stay put
    const Matrix<S>& m = src.blocks[b];
    Matrix<S> f(2);
    f.at(0, 0) = m.at(1, 1);
    f.at(0, 1) = m.at(0, 1);
    f.at(1, 0) = m.at(1, 0);
    f.at(1, 1) = m.at(0, 0);
    out.blocks.push_back(std::move(f));
  }
  return out;
}

/// Content block, then the sylvester pair blocks, then the #-sylvester
/// pair blocks; total dimension 2*rank^2 - rank.
template <Semiring S>
BlockDiag<S> baxter_representation(const Word& w, int rank) {
  BlockDiag<S> m = representation<S>(w, rank);
  BlockDiag<S> sharp = sharp_representation<S>(w, rank);
  for (std::size_t b = 1; b < sharp.blocks.size(); ++b)
    m.blocks.push_back(std::move(sharp.blocks[b]));
  return m;
}

// JSON trees mirror the taiga schema without multiplicities; kind is
// "bst-right" or "bst-left".
nlohmann::json to_json(const Bst& t, const std::string& kind);
Bst tree_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BaxterPair& p);
BaxterPair baxter_from_json(const nlohmann::json& j);

}  // namespace plactic::sylv
