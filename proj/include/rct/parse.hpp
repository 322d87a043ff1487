#pragma once

#include "rct/sparse_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rct {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*, integer and p/q literals,
/// + - * / ^ and parentheses. Division is only allowed by nonzero constants.
/// Variables are declared on first use.
SparsePoly parse_poly(std::string_view text);

}  // namespace rct
