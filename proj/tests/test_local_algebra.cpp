#include <doctest.h>

#include <set>

#include "frontal/local_algebra.hpp"
#include "support.hpp"

using namespace frontal;
using testing_support::P;
using testing_support::PolyGen;

namespace {

const std::vector<std::string> kXYZ{"X", "Y", "Z"};
const std::vector<std::string> kXU{"x", "u"};

// Staircase count for a monomial ideal containing a pure power of each variable.
long staircase(const std::vector<Exponent>& gens, int n, int bound) {
  long count = 0;
  for (int a = 0; a < bound; ++a)
    for (int b = 0; b < (n > 1 ? bound : 1); ++b)
      for (int c = 0; c < (n > 2 ? bound : 1); ++c) {
        bool in_ideal = false;
        for (const auto& g : gens)
          if (a >= g[0] && b >= g[1] && c >= g[2]) in_ideal = true;
        if (!in_ideal) ++count;
      }
  return count;
}

}  // namespace

TEST_CASE("colength examples") {
  CHECK(colength({P("x"), P("y")}).value == 1);
  for (int k = 1; k <= 6; ++k)
    CHECK(colength({P("x^" + std::to_string(k)), P("y")}).value == k);
  auto r53 = colength({P("20*y^3 + 6*x*y"), P("60*y^2 + 6*x")});
  CHECK(r53.finite);
  CHECK(r53.value == 3);
  CHECK(colength({P("15*y^4 + x"), P("60*y^3")}).value == 3);
}

TEST_CASE("colength reports a quotient basis in graded-lex order") {
  auto r = colength({P("x^2"), P("y^2")});
  REQUIRE(r.finite);
  CHECK(r.value == 4);
  CHECK(static_cast<long>(r.monomial_basis.size()) == r.value);
  std::vector<Exponent> expected{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
  CHECK(r.monomial_basis == expected);
  CHECK(r.stabilized_at <= r.cap);
}

TEST_CASE("colength of a unit ideal is zero and non-isolated ideals hit the cap") {
  CHECK(colength({P("1 + x"), P("y")}).value == 0);
  auto r = colength({P("y^2"), P("x*y")}, 20);
  CHECK_FALSE(r.finite);
  CHECK(r.cap == 20);
  CHECK_THROWS_AS(colength(std::vector<Poly>{}), Error);
}

TEST_CASE("jet-valid ideals only use the valid orders") {
  IdealSpec spec{{P("x + y^9"), P("y^3")}, 5};
  auto r = colength(spec);
  CHECK(r.finite);
  CHECK(r.value == 3);
  IdealSpec too_short{{P("x"), P("y^7")}, 4};
  CHECK_FALSE(colength(too_short).finite);
}

TEST_CASE("monomial ideals match the staircase count") {
  PolyGen gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 == 0 ? 2 : 3;
    const std::vector<std::string> vars = n == 2 ? xy_vars() : kXYZ;
    std::vector<Exponent> gens;
    for (int v = 0; v < n; ++v) {
      Exponent e{};
      e[v] = gen.integer(1, n == 2 ? 6 : 4);
      gens.push_back(e);
    }
    const int extra = gen.integer(0, 3);
    for (int i = 0; i < extra; ++i) {
      Exponent e{};
      for (int v = 0; v < n; ++v) e[v] = gen.integer(0, 3);
      gens.push_back(e);
    }
    std::vector<Poly> polys;
    for (const auto& e : gens) polys.push_back(Poly::monomial(vars, e, gen.coefficient()));
    CHECK(colength(polys).value == staircase(gens, n, 8));
  }
}

TEST_CASE("colength is invariant under linear coordinate changes") {
  PolyGen gen(32);
  const std::vector<std::vector<std::string>> ideals{
      {"y^2 - x^3", "x*y"}, {"x^2 + y^3", "x*y^2"}, {"20*y^3 + 6*x*y", "60*y^2 + 6*x"},
      {"y^3 + x^2*y", "x^4"}};
  for (const auto& gens_text : ideals) {
    std::vector<Poly> gens;
    for (const auto& s : gens_text) gens.push_back(P(s));
    const long base = colength(gens).value;
    for (int t = 0; t < 4; ++t) {
      int a = gen.integer(-3, 3), b = gen.integer(-3, 3), c = gen.integer(-3, 3),
          d = gen.integer(-3, 3);
      if (a * d - b * c == 0) {
        a = 1; b = 0; c = 0; d = 1;
      }
      Poly X = P(std::to_string(a) + "*x + " + std::to_string(b) + "*y");
      Poly Y = P(std::to_string(c) + "*x + " + std::to_string(d) + "*y");
      std::vector<Poly> moved;
      for (const auto& g : gens) moved.push_back(g.compose({X, Y}));
      CHECK(colength(moved).value == base);
    }
  }
}

TEST_CASE("Jacobian colength is finite exactly for reduced curves") {
  const std::vector<std::string> curves{
      "x*y", "y^2 - x^3", "y^3 + x^2*y", "y^2*(x + y)", "(y - x^2)^2", "x*y*(x - y)",
      "(1 + x)^2*y", "y^3 - x^5", "x^2*(y + x^3)", "y*(y^2 - x^3)"};
  for (const auto& s : curves) {
    Poly g = P(s);
    auto r = colength({partial_derivative(g, "x"), partial_derivative(g, "y")});
    CAPTURE(s);
    CHECK(r.finite == !has_repeated_factor_through_origin(g));
  }
}

TEST_CASE("fold module colengths reproduce the simple fold codimensions") {
  CHECK(colength_fold_module(P("u + x^2", kXU)).value == 1);
  CHECK(colength_fold_module(P("u^2 + x^3", kXU)).value == 4);
  CHECK(colength_fold_module(P("x*u + x^3", kXU)).value == 3);
  for (int k = 2; k <= 5; ++k)
    CHECK(colength_fold_module(P("x^2 + u^" + std::to_string(k), kXU)).value == k);
}

TEST_CASE("fold module colength equals the colength of (h_x, u h_u, h)") {
  PolyGen gen(33);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    Poly h = gen.poly(kXU, 3, 1, 4);
    if (h.is_zero()) continue;
    const Poly u = Poly::variable(kXU, "u");
    auto oracle = colength({partial_derivative(h, "x"), u * partial_derivative(h, "u"), h}, 24);
    if (!oracle.finite || oracle.value > 12) continue;
    ++checked;
    CAPTURE(to_string(h));
    auto r = colength_fold_module(h, 24);
    CHECK(r.finite);
    CHECK(r.value == oracle.value);
  }
  CHECK(checked >= 10);
}

TEST_CASE("jet membership") {
  const auto& xy = xy_vars();
  auto one = jet_solve_membership(Jet::from_poly(P("y^2"), 6), {Jet::from_poly(P("y^2"), 6)}, {"x"});
  REQUIRE(std::holds_alternative<MembershipSolution>(one));
  CHECK(std::get<MembershipSolution>(one).coefficients[0].poly() == P("1"));

  auto none = jet_solve_membership(Jet::from_poly(P("y^3"), 6),
                                   {Jet::from_poly(P("y^2"), 6), Jet::from_poly(P("y^4"), 6)}, {"x"});
  REQUIRE(std::holds_alternative<NoSolutionAtOrder>(none));
  CHECK(std::get<NoSolutionAtOrder>(none).order == 3);

  // Cuspidal edge: y^3 = Y*y + (y^2 - Y)*y over (x, y, Y).
  const std::vector<std::string> v{"x", "y", "Y"};
  auto J = [&](const std::string& s) { return Jet::from_poly(P(s, v), 8); };
  auto cusp = jet_solve_membership(J("y^3"), {J("1"), J("y"), J("y^2 - Y"), J("(y^2 - Y)*y")}, {"x", "Y"});
  REQUIRE(std::holds_alternative<MembershipSolution>(cusp));
  const auto& c = std::get<MembershipSolution>(cusp).coefficients;
  CHECK(c[0].poly().is_zero());
  CHECK(c[1].poly() == P("Y", v));

  CHECK_THROWS_AS(jet_solve_membership(Jet::from_poly(P("y"), 4), {Jet::from_poly(P("y"), 5)}, {"x"}),
                  Error);
  CHECK_THROWS_AS(jet_solve_membership(Jet::from_poly(P("y"), 4), {Jet::from_poly(P("y"), 4)}, {"z"}),
                  Error);
  (void)xy;
}
