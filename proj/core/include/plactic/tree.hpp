// Owning binary tree with value semantics; payload type varies per monoid
// family (bare label for binary search trees, label+multiplicity for taiga
// trees).
#pragma once

#include <memory>
#include <utility>

namespace plactic {

template <typename P>
class BinaryTree {
 public:
  struct Node {
    P data;
    std::unique_ptr<Node> left, right;
  };

  BinaryTree() = default;
  BinaryTree(const BinaryTree& o) : root_(clone(o.root_.get())) {}
  BinaryTree(BinaryTree&&) noexcept = default;
  BinaryTree& operator=(const BinaryTree& o) {
    root_ = clone(o.root_.get());
    return *this;
  }
  BinaryTree& operator=(BinaryTree&&) noexcept = default;

  bool empty() const { return root_ == nullptr; }
  const Node* root() const { return root_.get(); }
  std::unique_ptr<Node>& root_slot() { return root_; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return equal(a.root_.get(), b.root_.get());
  }

  static std::unique_ptr<Node> make_node(P data) {
    return std::make_unique<Node>(Node{std::move(data), nullptr, nullptr});
  }

 private:
  static std::unique_ptr<Node> clone(const Node* n) {
    if (!n) return nullptr;
    auto c = make_node(n->data);
    c->left = clone(n->left.get());
    c->right = clone(n->right.get());
    return c;
  }
  static bool equal(const Node* a, const Node* b) {
    if (!a || !b) return a == b;
    return a->data == b->data && equal(a->left.get(), b->left.get()) &&
           equal(a->right.get(), b->right.get());
  }

  std::unique_ptr<Node> root_;
};

}  // namespace plactic
