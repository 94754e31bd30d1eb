#include "plactic/stalactic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plactic::stal {

bool valid(const StalacticTableau& t) {
  std::set<Symbol> seen;
  for (const auto& col : t.columns) {
    if (col.multiplicity < 1) return false;
    if (!seen.insert(col.symbol).second) return false;
  }
  return true;
}

StalacticTableau insert(StalacticTableau t, Symbol a) {
  auto it = std::find_if(t.columns.begin(), t.columns.end(),
                         [&](const auto& c) { return c.symbol == a; });
  if (it == t.columns.end())
    t.columns.insert(t.columns.begin(), {a, 1});
  else
    ++it->multiplicity;
  return t;
}

StalacticTableau tableau_of(const Word& w) {
  StalacticTableau t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) t = insert(std::move(t), *it);
  return t;
}

bool equivalent(const Word& u, const Word& v) {
  return tableau_of(u) == tableau_of(v);
}

bool occurs_after_last(const Word& w, Symbol i, Symbol j) {
  if (i == j) throw std::invalid_argument("occurs_after_last requires i != j");
  bool expecting_j = false;  // set while scanning past the most recent i
  bool found = false;
  for (Symbol a : w) {
    if (a == i) {
      expecting_j = true;
      found = false;
    } else if (a == j && expecting_j) {
      found = true;
    }
  }
  return found;
}

const char* to_string(FElement e) {
  switch (e) {
    case FElement::E: return "E";
    case FElement::I: return "I";
    case FElement::J: return "J";
  }
  return "?";
}

std::array<std::array<FElement, 3>, 3> multiplication_table() {
  std::array<std::array<FElement, 3>, 3> table{};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      Matrix<Natural> p = element_matrix<Natural>(kFElements[a]) *
                          element_matrix<Natural>(kFElements[b]);
      bool found = false;
      for (FElement e : kFElements)
        if (p == element_matrix<Natural>(e)) {
          table[a][b] = e;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("product left the flip-flop set");
    }
  return table;
}

nlohmann::json to_json(const StalacticTableau& t) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : t.columns)
    cols.push_back(nlohmann::json::array({c.symbol, c.multiplicity}));
  return {{"kind", "stalactic"}, {"columns", cols}};
}

StalacticTableau tableau_from_json(const nlohmann::json& j) {
  StalacticTableau t;
  if (j.value("empty", false)) return t;
  for (const auto& c : j.at("columns"))
    t.columns.push_back({c.at(0).get<Symbol>(), c.at(1).get<int>()});
  return t;
}

}  // namespace plactic::stal
