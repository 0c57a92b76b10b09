// Power series inputs: supports with optional coefficients, read from
// polynomial expressions.
#pragma once

#include "jacnewton/arith.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacnewton {

struct InputSpec {
  std::vector<std::string> variables;  // coordinate order, x_0 first
  std::vector<IntVec> support;         // lexicographic, distinct
  std::vector<Rat> coefficients;       // parallel to support, or empty; never used by the mathematics
  bool nondegenerate = true;           // user assertion, not checked

  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  /// position is a 1-based column.
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sum of terms [coeff [*]] var[^exp] [*] var[^exp] ... Variables are
/// alphanumeric and ordered by first appearance unless a list is given.
/// Equal monomials are merged and monomials with zero coefficient dropped.
InputSpec parse_expression(const std::string& text, const std::optional<std::vector<std::string>>& variables = {});

/// Canonical form: terms in decreasing lexicographic exponent order.
std::string format_expression(const InputSpec& spec);

}  // namespace jacnewton
