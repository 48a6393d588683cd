#include "frontal/curve_lab.hpp"

#include <algorithm>
#include <map>

namespace frontal {

const std::vector<std::string>& t_vars() {
  static const std::vector<std::string> v{"t"};
  return v;
}

const std::vector<std::string>& st_vars() {
  static const std::vector<std::string> v{"s", "t"};
  return v;
}

ParamCurve make_curve(const Poly& p, const Poly& q) {
  ParamCurve c{p.embed(t_vars()), q.embed(t_vars())};
  if (sgn(c.p.constant_term()) != 0 || sgn(c.q.constant_term()) != 0)
    throw Error("curve components must vanish at t = 0");
  if (c.p.is_zero() && c.q.is_zero()) throw Error("constant curve");
  return c;
}

namespace {

// (f(s) - f(t)) / (s - t) over (s, t).
Poly divided(const Poly& f) {
  Poly out(st_vars());
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < e[0]; ++i) out.add_term(Exponent{i, e[0] - 1 - i, 0}, c);
  return out;
}

// f(t) as a polynomial in the given slot of (s, t).
Poly in_slot(const Poly& f, int slot) {
  Poly out(st_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent x{};
    x[slot] = e[0];
    out.add_term(x, c);
  }
  return out;
}

}  // namespace

CurveDoublePoint curve_double_point(const ParamCurve& c) {
  const Poly P = divided(c.p), Q = divided(c.q);
  const Poly one = Poly::constant(std::vector<std::string>{"s"}, 1);
  CurveDoublePoint out{one, 0};
  // A unit divided difference means no double points near the origin.
  if (sgn(P.constant_term()) != 0 || sgn(Q.constant_term()) != 0) return out;
  if (P.is_zero() || Q.is_zero()) throw Error("not generically injective");
  Poly r = resultant(P, Q, "t");
  if (r.is_zero()) throw Error("not generically injective");
  Poly d = r.embed({"s"});
  out.order = d.order();
  out.d = d * Scalar(1 / d.coeff(Exponent{out.order, 0, 0}));
  return out;
}

long intersection_number(const ParamCurve& a, const ParamCurve& b, int cap) {
  auto r = colength({in_slot(a.p, 1) - in_slot(b.p, 0), in_slot(a.q, 1) - in_slot(b.q, 0)}, cap);
  if (!r.finite) throw Error("branches share a component or the cap was reached");
  return r.value;
}

std::vector<int> semigroup_gaps(const ParamCurve& c, int bound) {
  // Rows p^i q^j truncated below `bound`, reduced to distinct lowest orders.
  std::map<int, Poly> pivots;
  auto reduce = [&](Poly f) {
    while (!f.is_zero()) {
      const int o = f.order();
      auto it = pivots.find(o);
      if (it == pivots.end()) {
        pivots.emplace(o, f);
        return;
      }
      f -= it->second * Scalar(f.coeff(Exponent{o, 0, 0}) / it->second.coeff(Exponent{o, 0, 0}));
    }
  };
  const int op = c.p.order(), oq = c.q.order();
  Poly pi = Poly::constant(t_vars(), 1);
  for (int i = 0; op > 0 ? i * op < bound : i == 0; ++i) {
    Poly term = pi;
    for (int j = 0; oq > 0 ? i * op + j * oq < bound : j == 0; ++j) {
      reduce(term.truncated(bound - 1));
      term = (term * c.q).truncated(bound - 1);
      if (oq <= 0) break;
    }
    pi = (pi * c.p).truncated(bound - 1);
    if (op <= 0) break;
  }
  std::vector<int> gaps;
  for (int n = 0; n < bound; ++n)
    if (!pivots.count(n)) gaps.push_back(n);
  return gaps;
}

DeltaResult delta_invariant(const std::vector<ParamCurve>& branches, int cap) {
  if (branches.empty()) throw Error("delta invariant of an empty curve");
  DeltaResult out;
  for (const auto& b : branches) {
    const CurveDoublePoint dp = curve_double_point(b);
    if (dp.order % 2 != 0) throw Error("double point function of odd order");
    out.branch_deltas.push_back(dp.order / 2);
    out.delta += dp.order / 2;
  }
  if (branches.size() == 1) {
    const int mu = static_cast<int>(2 * out.delta);
    const int bound = mu + 2;
    const auto gaps = semigroup_gaps(branches[0], bound);
    // Every integer >= the conductor (= mu) must be a value.
    const bool closed = std::none_of(gaps.begin(), gaps.end(), [&](int g) { return g >= mu; });
    out.semigroup_checked = true;
    out.semigroup_delta = closed ? static_cast<long>(gaps.size()) : -1;
  }
  const std::size_t r = branches.size();
  out.intersections.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      out.intersections[i][j] = intersection_number(branches[i], branches[j], cap);
      out.delta += out.intersections[i][j];
    }
  return out;
}

long curve_milnor(const std::vector<ParamCurve>& branches, int cap) {
  return 2 * delta_invariant(branches, cap).delta - static_cast<long>(branches.size()) + 1;
}

KappaRelation kappa_and_relation(const ParamCurve& c, int cap) {
  const Poly dp = partial_derivative(c.p, "t"), dq = partial_derivative(c.q, "t");
  if (dp.is_zero() && dq.is_zero()) throw Error("not a frontal curve: constant map");
  int kappa;
  if (dp.is_zero()) kappa = dq.order();
  else if (dq.is_zero()) kappa = dp.order();
  else kappa = std::min(dp.order(), dq.order());
  KappaRelation out;
  out.kappa = kappa;
  out.mu_image = delta_invariant({c}, cap).delta;
  out.mu_frontal = out.mu_image - out.kappa;
  return out;
}

}  // namespace frontal
