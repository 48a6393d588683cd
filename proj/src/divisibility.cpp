#include "frontal/divisibility.hpp"

namespace frontal {

const char* to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::LocallyDivides: return "locally_divides";
    case LocalVerdict::NotDivisible: return "not_divisible";
    case LocalVerdict::DividesUpToJetOrder: return "divides_up_to_jet_order";
  }
  return "?";
}

const char* to_string(DecisionTier t) { return t == DecisionTier::Exact ? "exact" : "jet"; }

LocalDivisibility local_divisibility_by_jets(const Poly& f, const Poly& g, int jet_cap) {
  LocalDivisibility out;
  out.tier = DecisionTier::Jet;
  const auto& vars = f.vars();
  out.mu_numerator = Poly(vars);
  out.mu_denominator = Poly::constant(vars, 1);
  if (f.is_zero()) {
    out.verdict = g.is_zero() ? LocalVerdict::LocallyDivides : LocalVerdict::NotDivisible;
    if (!g.is_zero()) {
      out.obstruction_order = g.order();
      out.obstruction = g.homogeneous_part(out.obstruction_order);
    }
    return out;
  }
  const int r = f.order();
  const Poly lowest = f.homogeneous_part(r);
  Poly residual = g;
  for (int k = 0; k <= jet_cap; ++k) {
    if (residual.is_zero()) {
      out.verdict = LocalVerdict::LocallyDivides;
      out.order = k;
      return out;
    }
    Poly part = residual.homogeneous_part(k);
    if (part.is_zero()) continue;
    auto step = exact_divide(part, lowest);
    if (k < r || std::holds_alternative<NotDivisible>(step)) {
      out.verdict = LocalVerdict::NotDivisible;
      out.obstruction = part;
      out.obstruction_order = k;
      out.order = k;
      return out;
    }
    const Poly& m = std::get<Poly>(step);
    out.mu_numerator += m;
    residual -= m * f;
  }
  out.verdict = LocalVerdict::DividesUpToJetOrder;
  out.order = jet_cap;
  out.mu_numerator = out.mu_numerator.truncated(jet_cap - r);
  return out;
}

LocalDivisibility local_divisibility(const Poly& f, const Poly& g, int jet_cap) {
  if (f.is_zero() || g.is_zero()) return local_divisibility_by_jets(f, g, jet_cap);
  Poly d = gcd(f, g);
  Poly f1 = exact_quotient(f, d);
  if (sgn(f1.constant_term()) != 0) {
    LocalDivisibility out;
    out.verdict = LocalVerdict::LocallyDivides;
    out.tier = DecisionTier::Exact;
    Poly g1 = exact_quotient(g, d);
    if (f1.is_constant()) {
      out.mu_numerator = g1 * Scalar(1 / f1.constant_term());
      out.mu_denominator = Poly::constant(f.vars(), 1);
    } else {
      out.mu_numerator = g1;
      out.mu_denominator = f1;
    }
    return out;
  }
  // f/d vanishes at the origin and is coprime to g/d, so f cannot divide g
  // in the algebraic local ring, nor (by faithful flatness) in the analytic
  // one. The jet tier only supplies a finite-order witness.
  LocalDivisibility out = local_divisibility_by_jets(f, g, jet_cap);
  if (out.verdict != LocalVerdict::NotDivisible) {
    out = LocalDivisibility{};
    out.verdict = LocalVerdict::NotDivisible;
    out.tier = DecisionTier::Exact;
    out.order = jet_cap;
  }
  return out;
}

}  // namespace frontal
