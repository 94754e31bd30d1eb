// Quasi-ribbon tableaux, the hypoplactic congruence, and its block-diagonal
// representation over a semiring: one diagonal content block plus one 2x2
// block per symbol pair i < j.  The image of each 2x2 block lies in the
// five-element monoid {E, I, J, K, L}.
#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <vector>

#include "plactic/matrix.hpp"
#include "plactic/word.hpp"

namespace plactic::hypo {

// Rows are listed top to bottom; row r+1 hangs below the last cell of
// row r.  Rows are non-empty and non-decreasing, and each row starts
// strictly above the value range of the previous one, which is exactly the
// planarity constraint of the shape.
struct QuasiRibbonTableau {
  std::vector<std::vector<Symbol>> rows;

  bool empty() const { return rows.empty(); }
  friend bool operator==(const QuasiRibbonTableau&,
                         const QuasiRibbonTableau&) = default;
};

bool valid(const QuasiRibbonTableau& t);

QuasiRibbonTableau insert(QuasiRibbonTableau t, Symbol a);

/// Left-to-right insertion of the whole word, starting from empty.
QuasiRibbonTableau tableau_of(const Word& w);

bool equivalent(const Word& u, const Word& v);

/// The pair datum of the congruence: w contains both i and j, no symbol
/// strictly between them, and no i after any j.  Requires i < j.
bool pair_linked(const Word& w, Symbol i, Symbol j);

enum class HElement { E, I, J, K, L };
inline constexpr std::array<HElement, 5> kHElements{
    HElement::E, HElement::I, HElement::J, HElement::K, HElement::L};
const char* to_string(HElement e);

template <Semiring S>
Matrix<S> element_matrix(HElement e) {
  Matrix<S> m(2);
  switch (e) {
    case HElement::E:
      return Matrix<S>::identity(2);
    case HElement::I:
      m.at(0, 0) = S::one();
      m.at(0, 1) = S::one();
      return m;
    case HElement::J:
      m.at(1, 1) = S::one();
      return m;
    case HElement::K:
      return m;  // the zero matrix
    case HElement::L:
      m.at(0, 1) = S::one();
      return m;
  }
  return m;
}

/// Image of w in the (i, j) block: the product of the letter images
/// i -> I, j -> J, strictly-between -> K, everything else -> E.
/// Requires i < j.
template <Semiring S>
Matrix<S> pair_matrix(const Word& w, Symbol i, Symbol j) {
  if (i >= j) throw std::invalid_argument("pair_matrix requires i < j");
  Matrix<S> acc = Matrix<S>::identity(2);
  for (Symbol a : w) {
    HElement e = HElement::E;
    if (a == i)
      e = HElement::I;
    else if (a == j)
      e = HElement::J;
    else if (a > i && a < j)
      e = HElement::K;
    if (e != HElement::E) acc = acc * element_matrix<S>(e);
  }
  return acc;
}

/// 5x5 multiplication table computed from the concrete matrices over the
/// naturals; table[a][b] is the product of the a-th and b-th elements in
/// the order E, I, J, K, L.
std::array<std::array<HElement, 5>, 5> multiplication_table();

/// Content block followed by the (i, j) blocks for 1 <= i < j <= rank,
/// in lexicographic order; total dimension rank^2.
template <Semiring S>
BlockDiag<S> representation(const Word& w, int rank) {
  BlockDiag<S> m;
  m.blocks.push_back(content_rep<S>(w, rank));
  for (Symbol i = 1; i <= rank; ++i)
    for (Symbol j = i + 1; j <= rank; ++j)
      m.blocks.push_back(pair_matrix<S>(w, i, j));
  return m;
}

nlohmann::json to_json(const QuasiRibbonTableau& t);
QuasiRibbonTableau tableau_from_json(const nlohmann::json& j);

}  // namespace plactic::hypo
