#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "frontal/curve_lab.hpp"
#include "frontal/fold.hpp"
#include "frontal/invariants.hpp"
#include "frontal/parser.hpp"
#include "frontal/report.hpp"

using namespace frontal;

namespace {

std::string fixtures_dir = FRONTAL_FIXTURES_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records a failed check without stopping the criterion.
struct Checker {
  Outcome out;
  int checked = 0;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

Poly X(const std::string& s) { return parse_expression(s); }
Poly T(const std::string& s) { return parse_expression(s, t_vars()); }
MapGerm G(const std::string& name, const std::string& p, const std::string& q) { return make_germ(name, X(p), X(q)); }
std::string S(long k) { return std::to_string(k); }

std::vector<GermSpec> corpus() {
  std::vector<GermSpec> out;
  for (const char* f : {"simple_folds.jsonl", "stable_frontals.jsonl", "reference_counts.jsonl", "extras.jsonl"}) {
    auto part = load_corpus(fixtures_dir + "/" + f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Frontal, generically injective corpus germs with their frontal data.
std::vector<FrontalData> frontal_corpus() {
  std::vector<FrontalData> out;
  for (const auto& s : corpus()) {
    const MapGerm g = make_germ(s.name, X(s.p), X(s.q));
    if (!check_frontal(g).frontal) continue;
    out.push_back(analyze_frontal(g));
  }
  return out;
}

struct FoldRow {
  std::string family;
  int k;
  std::string mond;
  std::string frontal;
};

std::vector<FoldRow> simple_folds() {
  std::vector<FoldRow> rows;
  for (int k = 1; k <= 5; ++k)
    rows.push_back({"S", k, "y^3 + x^" + S(k + 1) + "*y", "y^5 + x^" + S(k + 1) + "*y^3"});
  for (int k = 2; k <= 5; ++k)
    rows.push_back({"B", k, "x^2*y + y^" + S(2 * k + 1), "x^2*y^3 + y^" + S(2 * k + 3)});
  for (int k = 3; k <= 5; ++k) rows.push_back({"C", k, "x*y^3 + x^" + S(k) + "*y", "x*y^5 + x^" + S(k) + "*y^3"});
  rows.push_back({"F", 4, "y^5 + x^3*y", "y^7 + x^3*y^3"});
  return rows;
}

Poly implicit_equation(const ParamCurve& c) {
  const std::vector<std::string> v{"x", "y", "t"};
  return resultant(Poly::variable(v, "x") - c.p.embed(v), Poly::variable(v, "y") - c.q.embed(v), "t").embed(xy_vars());
}

Outcome c1() {
  Checker c;
  for (const auto& r : simple_folds()) {
    const auto fold = detect_fold(G("", "y^2", r.frontal));
    c.expect(fold && fold->frontalised, r.family + S(r.k) + " not recognised as a frontalised fold");
    if (!fold) continue;
    const ColengthResult cd = fold_codim(*fold);
    c.expect(cd.finite && cd.value == r.k, r.family + S(r.k) + "_check codim " + S(cd.value) + " != " + S(r.k));
  }
  c.out.detail = c.out.pass ? S(static_cast<long>(simple_folds().size())) + " rows" : c.out.detail;
  return c.out;
}

Outcome c2() {
  Checker c;
  struct Row {
    std::string name, p, q;
    SKTW want;
  };
  std::vector<Row> rows;
  for (int k = 1; k <= 4; ++k) {
    rows.push_back({"S" + S(k) + "_check", "y^2", "y^5 + x^" + S(k) + "*y^3", {0, 0, 0, k}});
    rows.push_back({"4^" + S(k) + "_1", "2*y^3 + x^" + S(k) + "*y", "3*y^4 + x^" + S(k) + "*y^2", {k, 0, 0, 0}});
  }
  rows.push_back({"5_3", "5*y^4 + 3*x*y^2", "4*y^5 + 2*x*y^3", {3, 3, 0, 0}});
  rows.push_back({"6_1", "3*y^5 + x*y", "5*y^6 + x*y^2", {3, 6, 1, 0}});
  for (const auto& r : rows) {
    const SkwCounts s = skw_counts(G(r.name, r.p, r.q));
    const bool ok = s.complete && s.sktw.S == r.want.S && s.sktw.K == r.want.K && s.sktw.T == r.want.T &&
                    s.sktw.W == r.want.W;
    c.expect(ok, r.name + " gave (" + S(s.sktw.S) + "," + S(s.sktw.K) + "," + S(s.sktw.T) + "," + S(s.sktw.W) + ")");
  }
  c.out.detail = c.out.pass ? S(c.checked) + " rows" : c.out.detail;
  return c.out;
}

Outcome c3() {
  Checker c;
  struct Row {
    std::string name, p, q, C, D;
  };
  const std::vector<Row> rows{{"cuspidal edge", "y^2", "y^3", "y", "1"},
                              {"folded Whitney umbrella", "y^2", "x*y^3", "y", "x"},
                              {"swallowtail", "y^3 + 3*x*y", "y^4 + 2*x*y^2", "x + y^2", "3*x + y^2"}};
  for (const auto& r : rows) {
    const FrontalData d = analyze_frontal(G(r.name, r.p, r.q));
    c.expect(equal_up_to_unit(d.cuspidal, X(r.C)), r.name + ": C = " + to_string(d.cuspidal));
    c.expect(equal_up_to_unit(d.tau, X(r.D)), r.name + ": D+ = " + to_string(d.tau));
  }
  c.out.detail = c.out.pass ? "3 germs, C and D+ up to a unit" : c.out.detail;
  return c.out;
}

Outcome c4() {
  Checker c;
  const auto germs = frontal_corpus();
  for (const auto& d : germs) {
    const Poly py2 = d.cuspidal * d.cuspidal;
    const LocalDivisibility div = local_divisibility(py2, d.lambda);
    const bool exact = div.divides() && sgn(div.mu_denominator.constant_term()) != 0 &&
                       div.mu_denominator * d.lambda == div.mu_numerator * py2 &&
                       equal_up_to_unit(div.mu_numerator, d.tau);
    c.expect(exact, d.germ.name + ": lambda is not tau * p_y^2");
  }
  c.expect(germs.size() >= 20, "only " + S(static_cast<long>(germs.size())) + " frontal corpus germs");
  c.out.detail = c.out.pass ? S(static_cast<long>(germs.size())) + " frontal corpus germs" : c.out.detail;
  return c.out;
}

Outcome c5() {
  Checker c;
  const FrontalVerdict v = check_frontal(G("F4", "y^2", "y^5 + x^3*y"));
  c.expect(!v.frontal, "F4 reported frontal");
  c.expect(v.division.obstruction_order >= 0, "no finite-order obstruction");
  c.out.detail = c.out.pass ? "obstruction " + to_string(v.division.obstruction) + " at order " +
                                  S(v.division.obstruction_order)
                            : c.out.detail;
  return c.out;
}

Outcome c6() {
  Checker c;
  std::vector<MapGerm> folds;
  for (const auto& r : simple_folds()) folds.push_back(G(r.family + S(r.k) + "_check", "y^2", r.frontal));
  for (int k = 1; k <= 4; ++k) folds.push_back(G("S" + S(k) + "_check (x^k form)", "y^2", "y^5 + x^" + S(k) + "*y^3"));
  for (const auto& g : folds) {
    const FittingResult f = fitting_F3(g);
    bool unit = false;
    for (const auto& m : f.F2_generators) unit = unit || sgn(m.constant_term()) != 0;
    c.expect(unit, g.name + ": F2 is not the whole ring");
    c.expect(f.F3.finite && f.F3.value == 0, g.name + ": F3 != 0");
    const auto fold = detect_fold(g);
    const ColengthResult w = colength({fold->h.evaluate(1, 0).embed({"x"})});
    const SkwCounts s = skw_counts(g);
    c.expect(s.complete && w.finite && s.sktw.W == w.value, g.name + ": W != colength h(x,0)");
  }
  for (int k = 1; k <= 4; ++k)
    c.expect(skw_counts(G("", "y^2", "y^5 + x^" + S(k) + "*y^3")).sktw.W == k, "S_check(x^k): W != k");
  c.out.detail = c.out.pass ? S(static_cast<long>(folds.size())) + " fold germs" : c.out.detail;
  return c.out;
}

Outcome c7() {
  Checker c;
  auto C = [](const std::string& p, const std::string& q) { return make_curve(T(p), T(q)); };
  // (a) d(s) = s^mu on fixture branches.
  const std::vector<ParamCurve> branches{C("t^2", "t^3"),       C("t^2", "t^5 + t^6"), C("t^3", "t^4"),
                                         C("t^3", "t^5 + t^7"), C("t^3", "t^7 + t^8"), C("t^4", "t^6 + t^7"),
                                         C("t^4", "t^5"),       C("t^2", "t^7"),       C("t^3", "t^4 + t^5"),
                                         C("t^4", "t^6 + t^9")};
  for (const auto& b : branches) {
    const CurveDoublePoint dp = curve_double_point(b);
    const long mu = curve_milnor({b});
    c.expect(dp.order == mu && dp.d.homogeneous_part(dp.order) == Poly::monomial({"s"}, Exponent{dp.order, 0, 0}),
             "(a) d(s) is not s^mu for " + to_string(b.q));
  }
  // (b) Equation against parametrisation.
  const std::vector<std::pair<std::string, std::vector<ParamCurve>>> pairs{
      {"y^2 - x^3", {C("t^2", "t^3")}},
      {"x*y", {C("t", "t"), C("t", "-t")}},
      {"y^2 - x^4", {C("t", "t^2"), C("t", "-t^2")}},
      {"y^3 - x^4", {C("t^3", "t^4")}},
      {"y^2 - x^5", {C("t^2", "t^5")}},
      {"x*y*(x - y)", {C("t", "0"), C("0", "t"), C("t", "t")}}};
  for (const auto& [f, bs] : pairs) c.expect(milnor_plane(X(f)) == curve_milnor(bs), "(b) mismatch for " + f);
  // (c) mu >= 2(alpha - 1) on random branches (t^a, h(t)).
  std::mt19937 rng(20261016);
  int random_checked = 0;
  for (int trial = 0; trial < 400 && random_checked < 50; ++trial) {
    const int alpha = std::uniform_int_distribution<int>(2, 4)(rng);
    Poly h(t_vars());
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i)
      h.add_term(Exponent{std::uniform_int_distribution<int>(alpha + 1, 9)(rng), 0, 0},
                 Scalar(std::uniform_int_distribution<int>(1, 5)(rng)));
    const ParamCurve b = make_curve(Poly::monomial(t_vars(), Exponent{alpha, 0, 0}), h);
    try {
      curve_double_point(b);
    } catch (const Error&) {
      continue;
    }
    ++random_checked;
    const long mu = curve_milnor({b});
    c.expect(mu >= 2 * (alpha - 1), "(c) bound fails for " + to_string(h));
    c.expect(milnor_plane(implicit_equation(b)) == mu, "(c) equation oracle disagrees for " + to_string(h));
  }
  c.expect(random_checked == 50, "(c) only " + S(random_checked) + " injective random branches");
  // (d) Image equation on every corpus germ with a finite presentation.
  int presented = 0;
  for (const auto& s : corpus()) {
    const MapGerm g = make_germ(s.name, X(s.p), X(s.q));
    const PresentationMatrix m = presentation(g, 12);
    c.expect(image_equation_vanishes(g, m, fitting_F0(m)), "(d) F0(f) != 0 for " + s.name);
    ++presented;
  }
  c.out.detail = c.out.pass ? "10 branches, 6 pairs, 50 random branches, " + S(presented) + " presentations"
                            : c.out.detail;
  return c.out;
}

Outcome c8() {
  Checker c;
  const auto germs = frontal_corpus();
  for (const auto& d : germs) {
    const SkwCounts s = skw_counts(d);
    c.expect(s.complete, d.germ.name + ": colengths incomplete");
    if (!s.complete) continue;
    c.expect(recombine(s.sktw) == std::array<long, 4>{s.P3.value, s.PT.value, s.PAA.value, s.F3.value},
             d.germ.name + ": recombination differs");
    c.expect(s.nonnegative, d.germ.name + ": negative count");
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(0, 100);
  for (int i = 0; i < 1000; ++i) {
    const SKTW s{dist(rng), dist(rng), dist(rng), dist(rng)};
    const FrontalMilnor f = frontal_milnor(s, dist(rng));
    c.expect(f.via_image == f.via_source, "mu_F expressions disagree");
  }
  c.out.detail = c.out.pass ? S(static_cast<long>(germs.size())) + " germs, 1000 random tuples" : c.out.detail;
  return c.out;
}

Outcome c9() {
  Checker c;
  for (const auto& r : simple_folds()) {
    const std::string name = r.family + S(r.k);
    const auto fold = detect_fold(G(name, "y^2", r.mond));
    c.expect(fold && !fold->frontalised, name + ": Mond form not recognised as a fold");
    if (!fold) continue;
    const MapGerm f = frontalise(*fold);
    c.expect(f.p == X("y^2") && f.q == X(r.frontal), name + ": frontalisation gives " + to_string(f.q));
    c.expect(check_frontal(f).frontal, name + ": frontalisation is not frontal");
    const auto back = detect_fold(f);
    const ColengthResult before = fold_codim(*fold), after = fold_codim(*back);
    c.expect(before.finite && after.finite && before.value == after.value && before.value == r.k,
             name + ": codimension changed");
  }
  c.out.detail = c.out.pass ? S(c.checked / 4) + " rows" : c.out.detail;
  return c.out;
}

Outcome c10() {
  Checker c;
  for (int k = 1; k <= 2; ++k) {
    const std::string name = "S_check(x^" + S(k) + ")";
    const Report r = run_analyze({name, "y^2", "y^5 + x^" + S(k) + "*y^3", Json::object()});
    const int exit_code = r.parse_failed() ? 3 : r.undetermined() ? 4 : 0;
    c.expect(exit_code == 0, name + ": exit code " + S(exit_code));
    const Json& readings = r.data["invariants"]["readings"];
    c.expect(readings.size() == 2 && readings[0]["reading"] == "dplus" && readings[1]["reading"] == "full",
             name + ": both readings not present");
    if (readings.size() != 2) continue;
    const Scalar full_mu_f(readings[1]["muF"].get<std::string>());
    const bool integral = full_mu_f.get_den() == 1;
    c.expect(readings[1]["integral"] == integral, name + ": integrality flag wrong");
    c.expect(!integral, name + ": full reading unexpectedly integral");
    c.expect(readings[0]["computed"] == true, name + ": D+ reading not computed");
  }
  c.out.detail = c.out.pass ? "S_check(x^1), S_check(x^2): both readings, full reading non-integral, exit 0" : c.out.detail;
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) fixtures_dir = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"simple fold codimensions", c1},
      {"S, K, T, W reference rows", c2},
      {"stable frontal curve equations", c3},
      {"lambda = tau * p_y^2 exactly", c4},
      {"F4 is not frontal", c5},
      {"fold Fitting degeneracy", c6},
      {"oracle equivalences", c7},
      {"S, K, T, W consistency", c8},
      {"frontalisation", c9},
      {"reading ambiguity reported", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
