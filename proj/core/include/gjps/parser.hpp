#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gjps/polynomial.hpp"

namespace gjps {

/// Syntax error with the 0-based position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Grammar: expressions over + - * ^ with parentheses, integer or a/b rational
// literals, and the declared variable names. Exponents are non-negative
// integer literals. Parsing the canonical printer's output is a fixed point.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace gjps
