// Stalactic tableaux (top-aligned columns of equal symbols), the stalactic
// congruence, and its representation: a content block plus one 2x2
// flip-flop block per pair i < j.
#pragma once

#include <array>
#include <nlohmann/json.hpp>
#include <vector>

#include "plactic/matrix.hpp"
#include "plactic/word.hpp"

namespace plactic::stal {

struct StalacticTableau {
  struct Column {
    Symbol symbol;
    int multiplicity;
    friend bool operator==(const Column&, const Column&) = default;
  };
  std::vector<Column> columns;  // left to right

  bool empty() const { return columns.empty(); }
  friend bool operator==(const StalacticTableau&,
                         const StalacticTableau&) = default;
};

bool valid(const StalacticTableau& t);

/// New symbols open a column on the left, repeated ones extend their column.
StalacticTableau insert(StalacticTableau t, Symbol a);

/// Right-to-left insertion of the whole word, starting from empty.  The
/// first row then lists the symbols in rightmost-occurrence order.
StalacticTableau tableau_of(const Word& w);

bool equivalent(const Word& u, const Word& v);

/// The pair datum of the congruence: w contains i and some j occurs after
/// the last i.  Requires i != j.
bool occurs_after_last(const Word& w, Symbol i, Symbol j);

enum class FElement { E, I, J };
inline constexpr std::array<FElement, 3> kFElements{FElement::E, FElement::I,
                                                    FElement::J};
const char* to_string(FElement e);

template <Semiring S>
Matrix<S> element_matrix(FElement e) {
  Matrix<S> m(2);
  switch (e) {
    case FElement::E:
      return Matrix<S>::identity(2);
    case FElement::I:
      m.at(0, 0) = S::one();
      m.at(0, 1) = S::one();
      return m;
    case FElement::J:
      m.at(0, 0) = S::one();
      return m;
  }
  return m;
}

/// Image of w in the (i, j) block: i -> I, j -> J, everything else -> E.
/// Requires i < j.
template <Semiring S>
Matrix<S> pair_matrix(const Word& w, Symbol i, Symbol j) {
  if (i >= j) throw std::invalid_argument("pair_matrix requires i < j");
  Matrix<S> acc = Matrix<S>::identity(2);
  for (Symbol a : w) {
    if (a == i)
      acc = acc * element_matrix<S>(FElement::I);
    else if (a == j)
      acc = acc * element_matrix<S>(FElement::J);
  }
  return acc;
}

std::array<std::array<FElement, 3>, 3> multiplication_table();

/// Content block plus the (i, j) blocks for i < j; total dimension rank^2.
template <Semiring S>
BlockDiag<S> representation(const Word& w, int rank) {
  BlockDiag<S> m;
  m.blocks.push_back(content_rep<S>(w, rank));
  for (Symbol i = 1; i <= rank; ++i)
    for (Symbol j = i + 1; j <= rank; ++j)
      m.blocks.push_back(pair_matrix<S>(w, i, j));
  return m;
}

nlohmann::json to_json(const StalacticTableau& t);
StalacticTableau tableau_from_json(const nlohmann::json& j);

}  // namespace plactic::stal
