#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cycomp {

// Helpers on plain U/D step words (not necessarily balanced).
bool is_ud_word(std::string_view w);
bool is_dyck_word(std::string_view w);

// Every prefix has strictly more U's than `weight` times its D's.
bool is_dominating_word(std::string_view w, int weight);

// Number of rotation start positions whose rotation is `weight`-dominating.
int count_dominating_shifts(std::string_view w, int weight);

// Balanced U/D word whose prefixes never have more D's than U's.
class DyckWord {
 public:
  explicit DyckWord(std::string steps);  // validates via is_dyck_word

  const std::string& word() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size()) / 2; }

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string steps_;
};

}  // namespace cycomp
