#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kingmesh {

/// A catalog number that is unknown, or not solved where a closed form is needed.
class UnknownPatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pattern text that does not conform to the grammar. `position` is a byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kingmesh
