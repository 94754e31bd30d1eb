#include "plactic/hypoplactic.hpp"

#include <stdexcept>

namespace plactic::hypo {

bool valid(const QuasiRibbonTableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k - 1] > row[k]) return false;
    if (r > 0 && t.rows[r - 1].back() >= row.front()) return false;
  }
  return true;
}

QuasiRibbonTableau insert(QuasiRibbonTableau t, Symbol a) {
  // locate the last entry <= a; reading order (row by row) is sorted, so
  // this also identifies the first entry > a
  std::size_t row = t.rows.size();  // row containing x, or size() if none
  std::size_t idx = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t k = 0; k < t.rows[r].size(); ++k)
      if (t.rows[r][k] <= a) {
        row = r;
        idx = k;
      }

  if (row == t.rows.size()) {
    // nothing <= a: a becomes a new top-left entry with all of t below it
    t.rows.insert(t.rows.begin(), {a});
    return t;
  }
  if (row == t.rows.size() - 1 && idx == t.rows[row].size() - 1) {
    // nothing > a: append to the bottom-right
    t.rows.back().push_back(a);
    return t;
  }
  // split between x = rows[row][idx] and its successor: everything up to x
  // keeps its place, a goes to the right of x, and the rest drops to a new
  // row underneath a
  std::vector<Symbol> rest(t.rows[row].begin() + static_cast<long>(idx) + 1,
                           t.rows[row].end());
  t.rows[row].resize(idx + 1);
  t.rows[row].push_back(a);
  if (!rest.empty())
    t.rows.insert(t.rows.begin() + static_cast<long>(row) + 1, std::move(rest));
  return t;
}

QuasiRibbonTableau tableau_of(const Word& w) {
  QuasiRibbonTableau t;
  for (Symbol a : w) t = insert(std::move(t), a);
  return t;
}

bool equivalent(const Word& u, const Word& v) {
  return tableau_of(u) == tableau_of(v);
}

bool pair_linked(const Word& w, Symbol i, Symbol j) {
  if (i >= j) throw std::invalid_argument("pair_linked requires i < j");
  bool has_i = false, has_j = false;
  for (Symbol a : w) {
    if (a == i) {
      if (has_j) return false;  // a scattered ji
      has_i = true;
    } else if (a == j) {
      has_j = true;
    } else if (a > i && a < j) {
      return false;
    }
  }
  return has_i && has_j;
}

const char* to_string(HElement e) {
  switch (e) {
    case HElement::E: return "E";
    case HElement::I: return "I";
    case HElement::J: return "J";
    case HElement::K: return "K";
    case HElement::L: return "L";
  }
  return "?";
}

std::array<std::array<HElement, 5>, 5> multiplication_table() {
  std::array<std::array<HElement, 5>, 5> table{};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      Matrix<Natural> p = element_matrix<Natural>(kHElements[a]) *
                          element_matrix<Natural>(kHElements[b]);
      bool found = false;
      for (HElement e : kHElements)
        if (p == element_matrix<Natural>(e)) {
          table[a][b] = e;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("product left the five-element set");
    }
  return table;
}

nlohmann::json to_json(const QuasiRibbonTableau& t) {
  return {{"kind", "quasi-ribbon"}, {"rows", t.rows}};
}

QuasiRibbonTableau tableau_from_json(const nlohmann::json& j) {
  QuasiRibbonTableau t;
  if (j.value("empty", false)) return t;
  t.rows = j.at("rows").get<std::vector<std::vector<Symbol>>>();
  return t;
}

}  // namespace plactic::hypo
