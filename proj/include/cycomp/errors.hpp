#pragma once

#include <stdexcept>
#include <string>

namespace cycomp {

// Text input could not be parsed; `position` is the 1-based offset of the
// offending character (0 when the problem is the input as a whole).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int position)
      : std::runtime_error(what + " (position " + std::to_string(position) + ")"),
        position_(position) {}
  int position() const { return position_; }

 private:
  int position_;
};

// An enumeration was requested beyond the default size guard without the
// explicit override.
class SizeGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cycomp
