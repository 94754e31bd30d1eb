#include "plactic/taiga.hpp"

#include <limits>
#include <stdexcept>

namespace plactic::taig {

namespace {

using Node = TaigaTree::Node;

bool valid_node(const Node* n, Symbol lo, Symbol hi) {
  if (!n) return true;
  if (n->data.multiplicity < 1) return false;
  if (n->data.label <= lo || n->data.label >= hi) return false;
  return valid_node(n->left.get(), lo, n->data.label) &&
         valid_node(n->right.get(), n->data.label, hi);
}

}  // namespace

bool valid(const TaigaTree& t) {
  return valid_node(t.root(), std::numeric_limits<Symbol>::min(),
                    std::numeric_limits<Symbol>::max());
}

TaigaTree insert(TaigaTree t, Symbol a) {
  auto* slot = &t.root_slot();
  while (*slot) {
    Node& n = **slot;
    if (a == n.data.label) {
      ++n.data.multiplicity;
      return t;
    }
    slot = a < n.data.label ? &n.left : &n.right;
  }
  *slot = TaigaTree::make_node({a, 1});
  return t;
}

TaigaTree tree_of(const Word& w) {
  TaigaTree t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) t = insert(std::move(t), *it);
  return t;
}

bool equivalent(const Word& u, const Word& v) {
  return tree_of(u) == tree_of(v);
}

bool subtree_pair(const Word& w, Symbol i, Symbol j) {
  if (i == j) throw std::invalid_argument("subtree_pair requires i != j");
  const Symbol lo = i < j ? i : j, hi = i < j ? j : i;
  // any valid factorization must use the last position whose letter lies in
  // the interval; that letter has to be j, with an i somewhere before it
  std::size_t last = w.size();
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p] >= lo && w[p] <= hi) last = p;
  if (last == w.size() || w[last] != j) return false;
  for (std::size_t p = 0; p < last; ++p)
    if (w[p] == i) return true;
  return false;
}

const char* to_string(TElement e) {
  switch (e) {
    case TElement::E: return "E";
    case TElement::K: return "K";
    case TElement::J: return "J";
    case TElement::I: return "I";
    case TElement::L: return "L";
  }
  return "?";
}

std::array<std::array<TElement, 5>, 5> multiplication_table() {
  std::array<std::array<TElement, 5>, 5> table{};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      Matrix<Natural> p = element_matrix<Natural>(kTElements[a]) *
                          element_matrix<Natural>(kTElements[b]);
      bool found = false;
      for (TElement e : kTElements)
        if (p == element_matrix<Natural>(e)) {
          table[a][b] = e;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("product left the five-element set");
    }
  return table;
}

namespace {

nlohmann::json node_json(const Node* n) {
  if (!n) return nullptr;
  return {{"label", n->data.label},
          {"mult", n->data.multiplicity},
          {"left", node_json(n->left.get())},
          {"right", node_json(n->right.get())}};
}

std::unique_ptr<Node> node_from_json(const nlohmann::json& j) {
  if (j.is_null()) return nullptr;
  auto n = TaigaTree::make_node({j.at("label").get<Symbol>(), j.at("mult").get<int>()});
  n->left = node_from_json(j.at("left"));
  n->right = node_from_json(j.at("right"));
  return n;
}

}  // namespace

nlohmann::json to_json(const TaigaTree& t) {
  return {{"kind", "taiga"}, {"root", node_json(t.root())}};
}

TaigaTree tree_from_json(const nlohmann::json& j) {
  TaigaTree t;
  if (j.value("empty", false)) return t;
  t.root_slot() = node_from_json(j.at("root"));
  return t;
}

}  // namespace plactic::taig
