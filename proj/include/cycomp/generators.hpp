#pragma once

#include <optional>

#include "cycomp/composition.hpp"
#include "cycomp/dyck.hpp"
#include "cycomp/stream.hpp"
#include "cycomp/tree.hpp"

namespace cycomp {

// Generators refuse sizes above this unless `force` is set; prevents
// accidental combinatorial explosion.
inline constexpr int kEnumSizeGuard = 20;

// All generators are deterministic: two runs yield identical sequences.

// Compositions of n into k parts, lexicographic by part sequence.
// Throws std::invalid_argument unless 1 <= k <= n.
Stream<Composition> enum_compositions(int n, int k, bool force = false);

// Compositions of n into k parts with exactly m non-unitary parts.
// Parameter combinations with no witnesses yield an empty stream.
Stream<Composition> enum_compositions_refined(int n, int k, int m, bool force = false);

// Dyck words of semilength n, lexicographic with U < D.
Stream<DyckWord> enum_dyck(int n, bool force = false);

// Plane trees with n edges, ordered by their parenthesis serialization.
Stream<PlaneTree> enum_plane_trees(int n, bool force = false);

// Binary trees with n nodes, ordered by the U word(L) D word(R) encoding.
Stream<BinaryTree> enum_binary_trees(int n, bool force = false);

// Dominant (2-dominating) compositions of 2n+1 into n parts; catalan(n) many.
Stream<Composition> enum_dominant(int n, bool force = false);

// Dominant compositions with exactly m non-unitary parts; narayana(n,m) many.
Stream<Composition> enum_dominant_refined(int n, int m, bool force = false);

// Underlined compositions over Comp_{n,k} (all m) or Comp_{n,k,m}.
Stream<UnderlinedComposition> enum_underlined(int n, int k, std::optional<int> m = std::nullopt,
                                              bool force = false);

// r-element subsets of {1..n} in lexicographic order.
Stream<std::vector<int>> enum_subsets(int n, int r);

}  // namespace cycomp
