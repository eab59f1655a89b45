#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycomp/composition.hpp"
#include "cycomp/dyck.hpp"
#include "cycomp/tree.hpp"

namespace cycomp {

// The word U^{c_1} D U^{c_2} D ... U^{c_k} D. Not necessarily a Dyck word.
std::string composition_to_word(const Composition& c);

// Inverse of composition_to_word; input must match (U+D)+. Throws ParseError
// with the offending position otherwise.
Composition word_to_composition(std::string_view w);

// All rotation indices (0-based) whose rotation is `weight`-dominating,
// paired with the rotated composition, in rotation order.
std::vector<std::pair<int, Composition>> dominating_shifts(const Composition& c, int weight = 2);

// First 2-dominating shift, if any. Unique for compositions of 2n+1 into n
// parts by the cycle lemma.
std::optional<std::pair<int, Composition>> dominant_shift(const Composition& c);

// Preorder edge traversal: U on the way down, D on the way up.
DyckWord tree_to_dyck(const PlaneTree& t);
PlaneTree dyck_to_tree(const DyckWord& w);

// Encoding of a plane tree as a binary tree on its non-root nodes:
// left child = leftmost child in the tree, right child = next younger
// sibling; the binary root is the tree root's leftmost child.
BinaryTree plane_to_binary(const PlaneTree& t);
PlaneTree binary_to_plane(const BinaryTree& b);

// Mirror symmetry: swaps left and right slots recursively. Involution.
BinaryTree mirror_binary(const BinaryTree& b);

// Conjugate of mirror_binary by the binary encoding. Involution on plane
// trees exchanging (leaf, gleaf) with (internal, pint).
PlaneTree mirror_plane(const PlaneTree& t);

// The node correspondence behind mirror_plane: every internal node is sent
// to its youngest child; a leaf goes to the root when no node on its root
// path has an elder sibling, and otherwise to the closest elder sibling of
// the first such node. A bijection on the nodes of t.
int partner_node(const PlaneTree& t, int v);

// Builds a plane tree from an underlined composition by repeated
// amalgamation of claws at underlined labels (smallest label first, next
// surviving component in cyclic claw order).
PlaneTree tree_from_underlined(const UnderlinedComposition& uc);

// All k preimages of t under tree_from_underlined, where k is the number of
// internal nodes. The first entry is the canonical breadth-first preimage.
std::vector<UnderlinedComposition> underlined_preimages(const PlaneTree& t);

}  // namespace cycomp
