#include <doctest.h>

#include <random>

#include "frontal/curve_lab.hpp"
#include "frontal/fold.hpp"
#include "frontal/invariants.hpp"
#include "support.hpp"

using namespace frontal;
using testing_support::P;

namespace {

MapGerm G(const std::string& p, const std::string& q) { return make_germ("", P(p), P(q)); }
std::string S(int k) { return std::to_string(k); }
Scalar Q(long n, long d = 1) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

void check_sktw(const MapGerm& g, long s, long k, long t, long w) {
  const SkwCounts c = skw_counts(g);
  REQUIRE(c.complete);
  CHECK(c.sktw.S == s);
  CHECK(c.sktw.K == k);
  CHECK(c.sktw.T == t);
  CHECK(c.sktw.W == w);
  CHECK(c.nonnegative);
}

ParamCurve C(const std::string& p, const std::string& q) { return make_curve(P(p, t_vars()), P(q, t_vars())); }

}  // namespace

TEST_CASE("S, K, T, W of the reference germs") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    check_sktw(G("y^2", "y^5 + x^" + S(k) + "*y^3"), 0, 0, 0, k);
    check_sktw(G("2*y^3 + x^" + S(k) + "*y", "3*y^4 + x^" + S(k) + "*y^2"), k, 0, 0, 0);
  }
  check_sktw(G("5*y^4 + 3*x*y^2", "4*y^5 + 2*x*y^3"), 3, 3, 0, 0);
  check_sktw(G("3*y^5 + x*y", "5*y^6 + x*y^2"), 3, 6, 1, 0);
}

TEST_CASE("colengths of 6_1") {
  const SkwCounts c = skw_counts(G("3*y^5 + x*y", "5*y^6 + x*y^2"));
  CHECK(c.P3.value == 3);
  CHECK(c.PT.value == 12);
  CHECK(c.PAA.value == 12);
  CHECK(c.F3.value == 10);
}

TEST_CASE("recombination inverts the solve") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(0, 20);
  for (int i = 0; i < 200; ++i) {
    const SKTW s{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto r = recombine(s);
    CHECK(r[0] == s.S);
    CHECK(r[2] - 2 * r[0] == s.K);
    CHECK(r[1] - r[2] == s.W);
    CHECK(r[3] - r[2] + r[0] == s.T);
  }
}

TEST_CASE("milnor_plane") {
  CHECK(milnor_plane(P("x*y")) == 1);
  CHECK(milnor_plane(P("y^2 - x^3")) == 2);
  CHECK(milnor_plane(P("y^3 + x^2*y")) == 4);
  CHECK(milnor_plane(P("y")) == 0);
  CHECK_FALSE(milnor_plane(P("y^2"), 12).has_value());
  CHECK_THROWS_AS(milnor_plane(P("1 + x")), Error);
}

TEST_CASE("milnor_plane agrees with branch data") {
  const std::vector<std::pair<std::string, std::vector<ParamCurve>>> pairs{
      {"y^2 - x^3", {C("t^2", "t^3")}},
      {"x*y", {C("t", "t"), C("t", "-t")}},
      {"y^2 - x^4", {C("t", "t^2"), C("t", "-t^2")}},
      {"y^3 - x^4", {C("t^3", "t^4")}},
      {"y^2 - x^5", {C("t^2", "t^5")}},
      {"x*y*(x - y)", {C("t", "0"), C("0", "t"), C("t", "t")}},
  };
  for (const auto& [f, branches] : pairs) {
    CAPTURE(f);
    CHECK(milnor_plane(P(f)) == curve_milnor(branches));
  }
}

TEST_CASE("marar-mond evaluation") {
  auto zero = marar_mond_eval({0, 0, 0, 0}, 0, 0);
  CHECK(zero.image_c == 0);
  CHECK(zero.image_d == Q(1, 2));
  CHECK(marar_mond_eval({0, 0, 0, 1}, 0, 0).image_d == 0);
  CHECK(marar_mond_eval({0, 0, 0, 2}, 0, 1).image_d == 0);
  CHECK(marar_mond_eval({3, 6, 1, 0}, 4, 0).image_c == 10);
}

TEST_CASE("frontal milnor expressions") {
  CHECK(frontal_milnor({0, 0, 0, 1}, 0).via_source == 0);
  CHECK(frontal_milnor({0, 0, 0, 1}, 1).via_source == Q(1, 2));
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> dist(0, 50);
  for (int i = 0; i < 1000; ++i) {
    const SKTW s{dist(rng), dist(rng), dist(rng), dist(rng)};
    const long mu_d = dist(rng);
    const FrontalMilnor f = frontal_milnor(s, mu_d);
    // Independent evaluation of both displayed expressions with exact halves.
    const Scalar image_d = Q(2 * s.K + 2 * s.T + mu_d - s.W - s.S + 1, 2);
    CHECK(f.via_image == image_d - s.S - s.W + s.T + 1);
    CHECK(f.via_source == Q(mu_d + 3 * (1 - s.S - s.W), 2) + s.K + 2 * s.T);
    CHECK(f.via_image == f.via_source);
  }
}

TEST_CASE("quasihomogeneity") {
  auto a = quasihomogeneous_test(G("y^2", "y^3"));
  CHECK(a.qh);
  CHECK(a.w_x == 1);
  CHECK(a.w_y == 1);
  CHECK(a.degrees == std::array<long, 3>{1, 2, 3});
  auto b = quasihomogeneous_test(G("y^2", "y^5 + x^3*y^3"));
  CHECK(b.qh);
  CHECK(b.w_x == 2);
  CHECK(b.w_y == 3);
  CHECK(b.degrees == std::array<long, 3>{2, 6, 15});
  CHECK_FALSE(quasihomogeneous_test(G("y^2", "y^5 + x*y^3 + x^3*y")).qh);
  auto f4 = quasihomogeneous_test(G("y^2", "y^7 + x^3*y^3"));
  CHECK(f4.qh);
  CHECK(f4.w_x == 4);
  CHECK(f4.w_y == 3);
  CHECK(f4.degrees == std::array<long, 3>{4, 6, 21});
  CHECK(quasihomogeneous_test(G("y^2 + x*y", "y^3")).qh);
  CHECK_FALSE(quasihomogeneous_test(G("y^2 + x*y^3", "y^3")).qh);
}

TEST_CASE("fold germs: W = ord h(x,0), T = K = S = 0") {
  const std::vector<std::string> hs{"u + x^2", "u + x^4", "x^2 + u^2", "x^2 + u^4", "x*u + x^3", "x*u + x^5",
                                    "u^2 + x^3"};
  for (const auto& h : hs) {
    CAPTURE(h);
    const Poly hp = P(h, fold_vars());
    const MapGerm g = frontalise(FoldGerm{hp, false});
    const SkwCounts c = skw_counts(g);
    REQUIRE(c.complete);
    const auto w = colength({hp.evaluate(1, 0).embed({"x"})});
    REQUIRE(w.finite);
    CHECK(c.sktw.W == w.value);
    CHECK(c.sktw.S == 0);
    CHECK(c.sktw.K == 0);
    CHECK(c.sktw.T == 0);
    CHECK(c.F3.value == 0);
  }
}

TEST_CASE("both readings on S1 and S2") {
  const auto s1 = compute_invariants(analyze_frontal(G("y^2", "y^5 + x*y^3")));
  const auto& dp = s1.readings[0];
  const auto& full = s1.readings[1];
  CHECK(dp.computed);
  CHECK(dp.mu_d == 0);
  CHECK(dp.image_d == 0);
  CHECK(dp.mu_f == 0);
  CHECK(dp.integral);
  CHECK(full.computed);
  CHECK(full.mu_d == 1);
  CHECK(full.mu_f == Q(1, 2));
  CHECK_FALSE(full.integral);
  REQUIRE(s1.codim.has_value());
  CHECK(*s1.codim == 0);

  const auto s2 = compute_invariants(analyze_frontal(G("y^2", "y^5 + x^2*y^3")));
  CHECK(s2.readings[0].mu_d == 1);
  CHECK(s2.readings[0].image_d == 0);
  CHECK(s2.counts.sktw.W == 2);
  CHECK(*s2.codim == 1);
}

TEST_CASE("stable germs and the conjecture report") {
  const auto edge = compute_invariants(analyze_frontal(G("y^2", "y^3")));
  CHECK_FALSE(edge.readings[0].applicable);
  CHECK(edge.readings[0].mu_f == 0);
  REQUIRE(edge.codim.has_value());
  CHECK(*edge.codim == 0);
  CHECK(edge.qh.qh);
  CHECK(edge.conjecture.verdicts[0] == "consistent: equality, quasihomogeneous");
  CHECK(edge.conjecture.label.find("experimental") != std::string::npos);

  const auto umbrella = compute_invariants(analyze_frontal(G("y^2", "x*y^3")));
  CHECK(umbrella.counts.sktw.W == 1);
  const auto six = compute_invariants(analyze_frontal(G("3*y^5 + x*y", "5*y^6 + x*y^2")));
  CHECK_FALSE(six.codim.has_value());
  CHECK(six.conjecture.verdicts[0] == "codimension not computed");
  REQUIRE(six.mu_c.has_value());
  CHECK(*six.mu_image_c == 2 * 3 + *six.mu_c);
}
