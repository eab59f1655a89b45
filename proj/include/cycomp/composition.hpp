#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cycomp {

// Ordered sequence of positive integer parts. Immutable after construction.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  // Parses the comma-separated form, e.g. "6,1,1,1".
  static Composition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access, matching the usual c_1..c_k indexing.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }
  int size() const { return static_cast<int>(parts_.size()); }  // k
  int sum() const { return sum_; }                              // n

  std::string str() const;  // "6,1,1,1"

  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// The k rotations of c in rotation order, starting from c itself.
// Duplicates are preserved for periodic compositions.
std::vector<Composition> cyclic_shifts(const Composition& c);

// A composition of n into k parts together with a (k-1)-subset of {1..n}
// marking underlined positions.
class UnderlinedComposition {
 public:
  UnderlinedComposition(Composition comp, std::vector<int> underline);

  // Text form: parts separated by "|", underlined numbers suffixed "*",
  // e.g. "1 2* 3 | 4* | 5 6 7* | 8 9".
  static UnderlinedComposition parse(const std::string& text);
  std::string str() const;

  const Composition& comp() const { return comp_; }
  const std::vector<int>& underline() const { return underline_; }  // sorted

  friend auto operator<=>(const UnderlinedComposition&, const UnderlinedComposition&) = default;

 private:
  Composition comp_;
  std::vector<int> underline_;
};

// Two-line array <c|l>: a composition paired with a permutation of {1..k}.
class LabeledComposition {
 public:
  LabeledComposition(Composition comp, std::vector<int> labels);

  static LabeledComposition with_identity_labels(Composition comp);

  const Composition& comp() const { return comp_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int i) const { return labels_.at(static_cast<std::size_t>(i) - 1); }
  // 1-based position of the given label.
  int position_of(int label) const;

  std::string str() const;  // "<4,3,2,1,1|1,2,3,4,5>"

  friend auto operator<=>(const LabeledComposition&, const LabeledComposition&) = default;

 private:
  Composition comp_;
  std::vector<int> labels_;
};

}  // namespace cycomp
