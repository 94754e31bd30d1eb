#include "plactic/sylvester.hpp"

#include <limits>
#include <stdexcept>

namespace plactic::sylv {

namespace {

using Node = Bst::Node;

// right strict: labels in the left subtree are <= the node label, labels in
// the right subtree are strictly greater
bool valid_rs_node(const Node* n, Symbol lo_excl, Symbol hi_incl) {
  if (!n) return true;
  if (n->data <= lo_excl || n->data > hi_incl) return false;
  return valid_rs_node(n->left.get(), lo_excl, n->data) &&
         valid_rs_node(n->right.get(), n->data, hi_incl);
}

// left strict: left subtree strictly smaller, right subtree >= node label
bool valid_ls_node(const Node* n, Symbol lo_incl, Symbol hi_excl) {
  if (!n) return true;
  if (n->data < lo_incl || n->data >= hi_excl) return false;
  return valid_ls_node(n->left.get(), lo_incl, n->data) &&
         valid_ls_node(n->right.get(), n->data, hi_excl);
}

}  // namespace

bool valid_right_strict(const Bst& t) {
  return valid_rs_node(t.root(), std::numeric_limits<Symbol>::min(),
                       std::numeric_limits<Symbol>::max());
}

bool valid_left_strict(const BstSharp& t) {
  return valid_ls_node(t.root(), std::numeric_limits<Symbol>::min(),
                       std::numeric_limits<Symbol>::max());
}

Bst insert_right_strict(Bst t, Symbol a) {
  auto* slot = &t.root_slot();
  while (*slot) slot = a <= (*slot)->data ? &(*slot)->left : &(*slot)->right;
  *slot = Bst::make_node(a);
  return t;
}

BstSharp insert_left_strict(BstSharp t, Symbol a) {
  auto* slot = &t.root_slot();
  while (*slot) slot = a >= (*slot)->data ? &(*slot)->right : &(*slot)->left;
  *slot = BstSharp::make_node(a);
  return t;
}

Bst right_tree_of(const Word& w) {
  Bst t;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    t = insert_right_strict(std::move(t), *it);
  return t;
}

BstSharp left_tree_of(const Word& w) {
  BstSharp t;
  for (Symbol a : w) t = insert_left_strict(std::move(t), a);
  return t;
}

bool equivalent(const Word& u, const Word& v) {
  return right_tree_of(u) == right_tree_of(v);
}

bool sharp_equivalent(const Word& u, const Word& v) {
  return left_tree_of(u) == left_tree_of(v);
}

BaxterPair baxter_pair_of(const Word& w) {
  return {left_tree_of(w), right_tree_of(w)};
}

bool baxter_equivalent(const Word& u, const Word& v) {
  return baxter_pair_of(u) == baxter_pair_of(v);
}

Word rank2_image(const Word& w, Symbol i, Symbol j) {
  if (i >= j) throw std::invalid_argument("rank2_image requires i < j");
  Word out;
  for (Symbol a : w) {
    if (a == i) {
      out.push_back(1);
    } else if (a == j) {
      out.push_back(2);
    } else if (a > i && a < j) {
      out.push_back(2);
      out.push_back(1);
    }
  }
  return out;
}

MElement canonical_m(const Word& w2) {
  std::uint64_t total2 = 0, trailing2 = 0;
  bool has1 = false;
  for (Symbol a : w2) {
    if (a == 1) {
      has1 = true;
      trailing2 = 0;
    } else if (a == 2) {
      ++total2;
      ++trailing2;
    } else {
      throw std::invalid_argument("canonical_m expects symbols 1 and 2");
    }
  }
  if (!has1) return {false, total2};
  return {true, trailing2};
}

MElement m_multiply(const MElement& a, const MElement& b) {
  // J^a J^b = J^{a+b};  anything followed by an I-type element collapses
  // onto it;  IJ^a J^b = IJ^{a+b}
  if (b.has_i) return b;
  return {a.has_i, a.power + b.power};
}

Rank2NormalForm rank2_normal_form(const Word& w2) {
  Content ev = content(w2);
  const auto ones = static_cast<std::uint64_t>(ev.count(1));
  const auto twos = static_cast<std::uint64_t>(ev.count(2));
  for (std::uint64_t a = 0; a <= twos; ++a) {
    Rank2NormalForm nf{a, ones, twos - a};
    if (equivalent(w2, rank2_normal_word(nf))) return nf;
  }
  throw std::logic_error("no content-compatible normal form matched");
}

Word rank2_normal_word(const Rank2NormalForm& nf) {
  Word w;
  w.insert(w.end(), nf.a, 2);
  w.insert(w.end(), nf.b, 1);
  w.insert(w.end(), nf.c, 2);
  return w;
}

Word dual_word(const Word& w, int rank) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 1 || *it > rank)
      throw std::invalid_argument("symbol out of range for rank");
    out.push_back(rank + 1 - *it);
  }
  return out;
}

namespace {

nlohmann::json node_json(const Node* n) {
  if (!n) return nullptr;
  return {{"label", n->data},
          {"left", node_json(n->left.get())},
          {"right", node_json(n->right.get())}};
}

std::unique_ptr<Node> node_from_json(const nlohmann::json& j) {
  if (j.is_null()) return nullptr;
  auto n = Bst::make_node(j.at("label").get<Symbol>());
  n->left = node_from_json(j.at("left"));
  n->right = node_from_json(j.at("right"));
  return n;
}

}  // namespace

nlohmann::json to_json(const Bst& t, const std::string& kind) {
  return {{"kind", kind}, {"root", node_json(t.root())}};
}

Bst tree_from_json(const nlohmann::json& j) {
  Bst t;
  if (j.value("empty", false)) return t;
  t.root_slot() = node_from_json(j.at("root"));
  return t;
}

nlohmann::json to_json(const BaxterPair& p) {
  return {{"kind", "baxter"},
          {"left", to_json(p.left_tree, "bst-left")},
          {"right", to_json(p.right_tree, "bst-right")}};
}

BaxterPair baxter_from_json(const nlohmann::json& j) {
  BaxterPair p;
  if (j.value("empty", false)) return p;
  p.left_tree = tree_from_json(j.at("left"));
  p.right_tree = tree_from_json(j.at("right"));
  return p;
}

}  // namespace plactic::sylv
