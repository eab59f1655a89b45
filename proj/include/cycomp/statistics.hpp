#pragma once

#include <string_view>
#include <vector>

#include "cycomp/composition.hpp"
#include "cycomp/tree.hpp"

namespace cycomp {

// Sum of (c_t - weight) for t in the 1-based closed range [i, j].
// The empty range j = i-1 is allowed and gives 0. Out-of-range indices throw.
int range_excess(const Composition& c, int i, int j, int weight = 2);

// Every prefix satisfies range_excess(c, 1, i, weight) > 0. Agrees with the
// word-level dominance of the composition's U^c1 D ... U^ck D word.
bool is_dominating(const Composition& c, int weight = 2);

// |w_{i+1} - w_i| <= 1 everywhere, resp. the weaker w_{i+1} - w_i >= -1.
bool is_smooth(const std::vector<int>& w);
bool is_l_smooth(const std::vector<int>& w);

// For an L-smooth w (1-based view of the vector) with w_i > w_j, i < j,
// returns the largest index t in [i, j) with w_t == w_i; then w_{t+1} == w_t - 1.
int down_step_witness(const std::vector<int>& w, int i, int j);

// Occurrence counts of the factors "UD" and "UUD"; occurrences are counted
// at each start position and may share steps with other factors.
int count_ud(std::string_view w);
int count_uud(std::string_view w);

struct TreeStats {
  int leaf = 0;      // nodes of degree 0
  int gleaf = 0;     // leaves that are leftmost children of a non-root node
  int internal = 0;  // nodes with at least one child (root included)
  int pint = 0;      // internal nodes of degree >= 2

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

TreeStats tree_stats(const PlaneTree& t);

// Number of non-unitary (> 1) parts.
int nu(const Composition& c);

// Classification of each part by the pattern (c_i, c_{i+1}) with the
// sentinel c_{k+1} = 1 appended for classification only.
enum class PartClass {
  Nuo,  // c_i > 1, c_{i+1} = 1
  Onu,  // c_i = 1, c_{i+1} > 1
  Dnu,  // c_i > 1, c_{i+1} > 1
  Do,   // c_i = 1, c_{i+1} = 1
};

const char* part_class_name(PartClass pc);

std::vector<PartClass> classify_parts(const Composition& c);

struct PartClassCounts {
  int nuo = 0;
  int onu = 0;
  int dnu = 0;
  int do_ = 0;

  friend bool operator==(const PartClassCounts&, const PartClassCounts&) = default;
};

PartClassCounts count_part_classes(const Composition& c);

}  // namespace cycomp
