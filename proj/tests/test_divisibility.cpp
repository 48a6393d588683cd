#include <doctest.h>

#include <optional>

#include "frontal/divisibility.hpp"
#include "support.hpp"

using namespace frontal;
using testing_support::P;
using testing_support::PolyGen;

namespace {

// Brute-force series solve: is there a polynomial mu of degree <= n with
// g - mu*f vanishing to order n + 1? Dense Gaussian elimination.
bool series_solvable(const Poly& f, const Poly& g, int n) {
  std::vector<Exponent> mons;
  for (int d = 0; d <= n; ++d)
    for (int a = 0; a <= d; ++a) mons.push_back(Exponent{a, d - a, 0});
  const std::size_t cols = mons.size();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& target : mons) {
    std::vector<Scalar> row(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Exponent& m = mons[j];
      if (target[0] < m[0] || target[1] < m[1]) continue;
      row[j] = f.coeff(Exponent{target[0] - m[0], target[1] - m[1], 0});
    }
    row[cols] = g.coeff(target);
    rows.push_back(row);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Scalar k = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j <= cols; ++j) rows[i][j] -= k * rows[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (sgn(rows[i][cols]) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("cuspidal edge: p_y divides q_y") {
  auto r = local_divisibility(P("2*y"), P("3*y^2"));
  CHECK(r.verdict == LocalVerdict::LocallyDivides);
  CHECK(r.tier == DecisionTier::Exact);
  CHECK(r.mu_numerator == P("3/2*y"));
  CHECK(r.mu_denominator == P("1"));
}

TEST_CASE("F4 example is not divisible, with a finite-order obstruction") {
  auto r = local_divisibility(P("2*y"), P("5*y^4 + x^3"));
  CHECK(r.verdict == LocalVerdict::NotDivisible);
  CHECK(r.tier == DecisionTier::Jet);
  CHECK(r.obstruction == P("x^3"));
  CHECK(r.obstruction_order == 3);
  CHECK_FALSE(series_solvable(P("2*y"), P("5*y^4 + x^3"), 3));
}

TEST_CASE("folded umbrella ratio") {
  auto r = local_divisibility(P("2*y"), P("3*x*y^3"));
  CHECK(r.verdict == LocalVerdict::LocallyDivides);
  CHECK(r.mu_numerator * P("2*y") == P("3*x*y^3"));
  CHECK(r.mu_numerator == P("3/2*x*y^2"));
}

TEST_CASE("unit denominators are accepted by the exact tier") {
  auto r = local_divisibility(P("y*(1 + x)"), P("y^2"));
  CHECK(r.verdict == LocalVerdict::LocallyDivides);
  CHECK(r.tier == DecisionTier::Exact);
  CHECK(r.mu_denominator.constant_term() != 0);
  CHECK(r.mu_numerator * P("y*(1 + x)") == P("y^2") * r.mu_denominator);
}

TEST_CASE("an obstruction beyond the jet cap is still decided by the exact tier") {
  auto r = local_divisibility(P("y"), P("y^2 + x^9"), 5);
  CHECK(r.verdict == LocalVerdict::NotDivisible);
  CHECK(r.tier == DecisionTier::Exact);
  CHECK(r.obstruction_order == -1);
  CHECK(local_divisibility_by_jets(P("y"), P("y^2 + x^9"), 5).verdict ==
        LocalVerdict::DividesUpToJetOrder);
  auto w = local_divisibility(P("y"), P("y^2 + x^9"));
  CHECK(w.tier == DecisionTier::Jet);
  CHECK(w.obstruction_order == 9);
}

TEST_CASE("degenerate inputs") {
  CHECK(local_divisibility(P("0"), P("x")).verdict == LocalVerdict::NotDivisible);
  CHECK(local_divisibility(P("0"), P("0")).verdict == LocalVerdict::LocallyDivides);
  CHECK(local_divisibility(P("x"), P("0")).verdict == LocalVerdict::LocallyDivides);
}

TEST_CASE("jet tier caps out on an analytic but not polynomial quotient") {
  // y - x^2 - ... : f = y*(1 - y) is a unit multiple of y, g = y*(1+x):
  // the exact tier proves it, the jet tier alone must reach the cap.
  auto r = local_divisibility_by_jets(P("y - y^2"), P("y + x*y"), 12);
  CHECK(r.verdict == LocalVerdict::DividesUpToJetOrder);
  CHECK(r.order == 12);
  CHECK(local_divisibility(P("y - y^2"), P("y + x*y")).tier == DecisionTier::Exact);
}

TEST_CASE("verdicts agree with brute-force series solving") {
  PolyGen gen(21);
  const int n = 6;
  int divides = 0, obstructed = 0;
  for (int i = 0; i < 50; ++i) {
    Poly f = gen.poly(xy_vars(), 3, 1, 3);
    if (f.is_zero()) continue;
    Poly g;
    switch (i % 3) {
      case 0: g = f * gen.poly(xy_vars(), 3, 0, 3); break;
      case 1: g = f * gen.poly(xy_vars(), 2, 0, 2) + gen.poly(xy_vars(), 1, 4, 6); break;
      default: g = gen.poly(xy_vars(), 4, 1, 5); break;
    }
    if (g.is_zero()) continue;
    auto r = local_divisibility(f, g, n + 4);
    if (r.divides()) {
      ++divides;
      CHECK(series_solvable(f, g, n));
    } else {
      ++obstructed;
      if (r.obstruction_order < 0) {
        CHECK(r.tier == DecisionTier::Exact);
        continue;
      }
      CHECK_FALSE(series_solvable(f, g, r.obstruction_order));
      if (r.obstruction_order > 0) CHECK(series_solvable(f, g, r.obstruction_order - 1));
    }
  }
  CHECK(divides > 5);
  CHECK(obstructed > 5);
}
