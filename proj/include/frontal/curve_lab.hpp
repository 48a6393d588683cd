#pragma once

#include <vector>

#include "frontal/local_algebra.hpp"
#include "frontal/poly.hpp"

namespace frontal {

/// Variable lists for curve germs: a branch is (p(t), q(t)); double point
/// data live in (s, t).
const std::vector<std::string>& t_vars();
const std::vector<std::string>& st_vars();

/// Parametrised plane branch t -> (p(t), q(t)) with p(0) = q(0) = 0.
struct ParamCurve {
  Poly p;
  Poly q;
};

/// Validates and re-expresses the components over (t).
ParamCurve make_curve(const Poly& p, const Poly& q);

struct CurveDoublePoint {
  /// d(s) = Res_t of the divided differences, scaled so that its lowest
  /// coefficient is 1. A unit (no double points) is reported as 1.
  Poly d;
  int order = 0;
};

/// Throws Error("not generically injective") when the resultant vanishes.
CurveDoublePoint curve_double_point(const ParamCurve& c);

struct DeltaResult {
  long delta = 0;
  /// Single branch only: delta from counting gaps of the value semigroup.
  bool semigroup_checked = false;
  long semigroup_delta = 0;
  std::vector<long> branch_deltas;
  /// intersections[i][j] for i < j.
  std::vector<std::vector<long>> intersections;
};

/// Local intersection number of two branches: dim C{s,t}/(p1(t) - p2(s), q1(t) - q2(s)).
long intersection_number(const ParamCurve& a, const ParamCurve& b, int cap = kDefaultJetCap);

/// Gaps of the value semigroup of one branch, found from the lowest-order
/// echelon form of the products p^i q^j truncated at `bound`.
std::vector<int> semigroup_gaps(const ParamCurve& c, int bound);

DeltaResult delta_invariant(const std::vector<ParamCurve>& branches, int cap = kDefaultJetCap);

/// Milnor's formula mu = 2 delta - r + 1.
long curve_milnor(const std::vector<ParamCurve>& branches, int cap = kDefaultJetCap);

struct KappaRelation {
  long kappa = 0;
  long mu_image = 0;
  long mu_frontal = 0;
};

/// Mono-germ frontal (p' | q' or q' | p'); kappa = min(ord p', ord q') is a
/// model assumption, mu_I = delta and mu_F = mu_I - kappa.
KappaRelation kappa_and_relation(const ParamCurve& c, int cap = kDefaultJetCap);

}  // namespace frontal
