#include <doctest.h>

#include "frontal/curve_lab.hpp"
#include "support.hpp"

using namespace frontal;
using testing_support::P;
using testing_support::PolyGen;

namespace {

ParamCurve C(const std::string& p, const std::string& q) { return make_curve(P(p, t_vars()), P(q, t_vars())); }
Poly S(const std::string& s) { return P(s, {"s"}); }

// Local equation of a branch (t^a, h(t)): Res_t(x - t^a, y - h(t)).
Poly implicit_equation(const ParamCurve& c) {
  const std::vector<std::string> v{"x", "y", "t"};
  const Poly x = Poly::variable(v, "x"), y = Poly::variable(v, "y");
  return resultant(x - c.p.embed(v), y - c.q.embed(v), "t").embed(xy_vars());
}

long plane_milnor(const Poly& f) {
  auto r = colength({partial_derivative(f, "x"), partial_derivative(f, "y")});
  REQUIRE(r.finite);
  return r.value;
}

// ord_t f(p(t), q(t)).
int order_along(const Poly& f, const ParamCurve& c) {
  return f.compose({c.p, c.q}).order();
}

}  // namespace

TEST_CASE("double point function of simple branches") {
  auto cusp = curve_double_point(C("t^2", "t^3"));
  CHECK(cusp.d == S("s^2"));
  CHECK(cusp.order == 2);
  auto e6 = curve_double_point(C("t^3", "t^4"));
  CHECK(e6.order == 6);
  CHECK(e6.d.homogeneous_part(6) == S("s^6"));
  auto smooth = curve_double_point(C("t", "t^2"));
  CHECK(smooth.d == S("1"));
  CHECK(smooth.order == 0);
  CHECK_THROWS_AS(curve_double_point(C("t^2", "t^4")), Error);
  CHECK_THROWS_AS(curve_double_point(C("t^2", "0")), Error);
}

TEST_CASE("delta, semigroup and milnor on known branches") {
  auto cusp = delta_invariant({C("t^2", "t^3")});
  CHECK(cusp.delta == 1);
  CHECK(cusp.semigroup_delta == 1);
  CHECK(curve_milnor({C("t^2", "t^3")}) == 2);
  auto e6 = delta_invariant({C("t^3", "t^4")});
  CHECK(e6.delta == 3);
  CHECK(e6.semigroup_delta == 3);
  CHECK(semigroup_gaps(C("t^3", "t^4"), 8) == std::vector<int>{1, 2, 5});
  CHECK(semigroup_gaps(C("t^2", "t^5"), 6) == std::vector<int>{1, 3});
  // A non-monomial first component.
  auto mixed = delta_invariant({C("t^2 + t^3", "t^5")});
  CHECK(mixed.delta == mixed.semigroup_delta);
}

TEST_CASE("multi-branch delta and milnor") {
  auto node = delta_invariant({C("t", "0"), C("0", "t")});
  CHECK(node.delta == 1);
  CHECK(node.intersections[0][1] == 1);
  CHECK(curve_milnor({C("t", "0"), C("0", "t")}) == 1);
  CHECK(curve_milnor({C("t", "0"), C("0", "t"), C("t", "t")}) == 4);
  CHECK(intersection_number(C("t", "0"), C("t^2", "t^3")) == 3);
  CHECK(intersection_number(C("t", "0"), C("t", "t^2")) == 2);
}

TEST_CASE("intersection numbers against implicit equations") {
  const std::vector<std::pair<ParamCurve, ParamCurve>> pairs{
      {C("t^2", "t^3"), C("t^3", "t^2")}, {C("t^2", "t^3"), C("t^2", "-t^3 + t^4")},
      {C("t^3", "t^4"), C("t", "t^2")},   {C("t^2", "t^5"), C("t^2", "t^5 + t^6")},
      {C("t", "t^3"), C("t", "t^3 + t^7")}};
  for (const auto& [a, b] : pairs) {
    const long i = intersection_number(a, b);
    CHECK(i == order_along(implicit_equation(b), a));
    CHECK(i == intersection_number(b, a));
  }
}

TEST_CASE("milnor of parametrisations matches the plane curve milnor number") {
  struct Case {
    std::string f;
    std::vector<ParamCurve> branches;
  };
  const std::vector<Case> cases{
      {"y^2 - x^3", {C("t^2", "t^3")}},
      {"y^3 - x^4", {C("t^3", "t^4")}},
      {"y^2 - x^5", {C("t^2", "t^5")}},
      {"y^3 - x^5", {C("t^3", "t^5")}},
      {"x*y", {C("t", "0"), C("0", "t")}},
      {"y*(y - x^2)", {C("t", "0"), C("t", "t^2")}},
      {"x*y*(x - y)", {C("t", "0"), C("0", "t"), C("t", "t")}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.f);
    CHECK(curve_milnor(c.branches) == plane_milnor(P(c.f)));
  }
}

TEST_CASE("double point function is s^mu on branches") {
  const std::vector<ParamCurve> branches{
      C("t^2", "t^3"),        C("t^2", "t^5 + t^6"),  C("t^3", "t^4"),  C("t^3", "t^5 + t^7"),
      C("t^3", "t^7 + t^8"),  C("t^4", "t^6 + t^7"),  C("t^4", "t^5"),  C("t^2", "t^7"),
      C("t^3", "t^4 + t^5"),  C("t^4", "t^6 + t^9")};
  for (const auto& b : branches) {
    CAPTURE(to_string(b.q));
    const auto dp = curve_double_point(b);
    const long mu = plane_milnor(implicit_equation(b));
    CHECK(dp.order == mu);
    CHECK(dp.d.homogeneous_part(dp.order) == S("s^" + std::to_string(mu)));
    CHECK(curve_milnor({b}) == mu);
  }
}

TEST_CASE("kappa relation") {
  auto cusp = kappa_and_relation(C("t^2", "t^3"));
  CHECK(cusp.kappa == 1);
  CHECK(cusp.mu_image == 1);
  CHECK(cusp.mu_frontal == 0);
  auto e6 = kappa_and_relation(C("t^3", "t^4"));
  CHECK(e6.kappa == 2);
  CHECK(e6.mu_image == 3);
  CHECK(e6.mu_frontal == 1);
  auto a4 = kappa_and_relation(C("t^2", "t^5"));
  CHECK(a4.mu_frontal == 1);
  CHECK_THROWS_AS(kappa_and_relation(C("t^2", "t^4")), Error);
}

TEST_CASE("random branches satisfy mu >= 2(alpha - 1) and match the plane oracle") {
  PolyGen gen(20261016);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    const int alpha = static_cast<int>(gen.integer(2, 4));
    Poly h(t_vars());
    const int terms = static_cast<int>(gen.integer(1, 3));
    for (int i = 0; i < terms; ++i)
      h.add_term(Exponent{static_cast<int>(gen.integer(alpha + 1, 9)), 0, 0}, gen.coefficient());
    if (h.is_zero()) continue;
    const ParamCurve b = make_curve(Poly::monomial(t_vars(), Exponent{alpha, 0, 0}), h);
    CAPTURE(alpha);
    CAPTURE(to_string(h));
    CurveDoublePoint dp;
    try {
      dp = curve_double_point(b);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    const long mu = curve_milnor({b});
    CHECK(mu >= 2 * (alpha - 1));
    CHECK(dp.order == mu);
    CHECK(mu == plane_milnor(implicit_equation(b)));
    const auto delta = delta_invariant({b});
    CHECK(delta.semigroup_delta == delta.delta);
  }
  CHECK(checked >= 50);
}
