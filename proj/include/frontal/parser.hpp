#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frontal/poly.hpp"

namespace frontal {

/// Parse failure with a 1-based position in the input text.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

private:
  int line_;
  int column_;
  std::string detail_;
};

/// Parses a polynomial expression over `vars`.
///
/// Grammar: integers, rational literals a/b, variable names, + - * ^ with
/// the usual precedence (^ binds tighter than unary minus), parentheses.
/// Multiplication must be written explicitly and exponents must be
/// nonnegative integer literals.
Poly parse_expression(std::string_view text, const std::vector<std::string>& vars = xy_vars());

}  // namespace frontal
