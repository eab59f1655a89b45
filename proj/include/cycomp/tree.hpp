#pragma once

#include <string>
#include <vector>

namespace cycomp {

// Rooted ordered tree. Nodes are numbered 0..n in preorder with 0 the root;
// the numbering is canonical, so equality of trees is equality of the
// children tables. Immutable after construction.
class PlaneTree {
 public:
  static PlaneTree single_node();

  // Builds from an arbitrary children table (ids 0..size-1, any numbering);
  // renumbers to canonical preorder.
  static PlaneTree from_children(const std::vector<std::vector<int>>& children, int root);

  // Nested-parentheses form: every node emits "(" + children + ")", so the
  // whole tree has node_count() matched pairs and the outer pair belongs to
  // the root. Stripping the outer pair and reading "(" as U, ")" as D gives
  // the preorder Dyck word of the tree.
  static PlaneTree parse(const std::string& text);
  std::string str() const;

  int node_count() const { return static_cast<int>(kids_.size()); }
  int edge_count() const { return node_count() - 1; }
  int root() const { return 0; }
  const std::vector<int>& children(int v) const;
  int parent(int v) const;  // -1 for the root
  int degree(int v) const { return static_cast<int>(children(v).size()); }
  bool is_leaf(int v) const { return children(v).empty(); }

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.kids_ == b.kids_; }
  friend auto operator<=>(const PlaneTree& a, const PlaneTree& b) { return a.kids_ <=> b.kids_; }

 private:
  PlaneTree() = default;

  std::vector<std::vector<int>> kids_;
  std::vector<int> parent_;
};

// Rooted tree where every node has an optional left and an optional right
// child; the two slots are distinguished. Nodes numbered in preorder
// (left before right), so equality is structural. May be empty.
class BinaryTree {
 public:
  BinaryTree() = default;  // empty tree

  static BinaryTree single_node();
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

  int size() const { return static_cast<int>(left_.size()); }
  bool empty() const { return left_.empty(); }
  int root() const { return 0; }
  int left(int v) const { return left_.at(static_cast<std::size_t>(v)); }    // -1 if absent
  int right(int v) const { return right_.at(static_cast<std::size_t>(v)); }  // -1 if absent

  // "." for an empty slot, "(" left right ")" for a node: single node "(..)"
  std::string str() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::vector<int> left_, right_;
};

}  // namespace cycomp
