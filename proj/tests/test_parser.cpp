#include <doctest.h>

#include "frontal/parser.hpp"
#include "support.hpp"

using namespace frontal;
using testing_support::PolyGen;

TEST_CASE("parsing") {
  Poly f = parse_expression("2*y^3 + x^2*y");
  CHECK(f.size() == 2);
  CHECK(f.coeff(Exponent{0, 3, 0}) == 2);
  CHECK(f.coeff(Exponent{2, 1, 0}) == 1);
  CHECK(parse_expression("y^5 + x^3*y^3") == parse_expression("x^3*y^3 + y^5"));
  CHECK(parse_expression("-3/2*x*y^2").coeff(Exponent{1, 2, 0}) == Scalar(-3, 2));
  CHECK(parse_expression("-y^2") == parse_expression("-(y^2)"));
  CHECK(parse_expression("(x + y)^2 - 2*x*y") == parse_expression("x^2 + y^2"));
  CHECK(parse_expression("4/6").constant_term() == Scalar(2, 3));
}

TEST_CASE("parse errors carry positions") {
  auto fails_at = [](const std::string& s, int line, int col) {
    try {
      parse_expression(s);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return;
    }
    FAIL("expected a parse error for " << s);
  };
  fails_at("y^-1", 1, 3);
  fails_at("2x", 1, 2);
  fails_at("x + z", 1, 5);
  fails_at("x +\n  (y", 2, 5);
  fails_at("x $ y", 1, 3);
  fails_at("1/0", 1, 3);
  fails_at("", 1, 1);
}

TEST_CASE("render then parse is the identity") {
  PolyGen gen(41);
  for (int i = 0; i < 100; ++i) {
    Poly f = gen.poly(xy_vars(), 6, 0, 8);
    CHECK(parse_expression(to_string(f)) == f);
  }
  const auto& v = xyy_vars();
  Poly g = parse_expression("y'^2 + y*y' - 1/3", v);
  CHECK(parse_expression(to_string(g), v) == g);
}
