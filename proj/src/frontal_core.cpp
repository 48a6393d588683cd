#include "frontal/frontal_core.hpp"

namespace frontal {

const char* to_string(GermErrorKind k) {
  switch (k) {
    case GermErrorKind::InvalidGerm: return "invalid_germ";
    case GermErrorKind::NotGenericallyImmersive: return "not_generically_immersive";
    case GermErrorKind::NotFrontal: return "not_frontal";
    case GermErrorKind::NotGenericallyInjective: return "not_generically_injective";
    case GermErrorKind::TheoremViolated: return "theorem_violated";
    case GermErrorKind::NonFinite: return "non_finite";
    case GermErrorKind::CapReached: return "cap_reached";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Undetermined: return "undetermined";
  }
  return "?";
}

MapGerm make_germ(std::string name, const Poly& p, const Poly& q) {
  MapGerm g;
  g.name = std::move(name);
  try {
    g.p = p.embed(xy_vars());
    g.q = q.embed(xy_vars());
  } catch (const Error& e) {
    throw GermError(GermErrorKind::InvalidGerm, std::string("components must be polynomials in x, y: ") + e.what());
  }
  if (sgn(g.p.constant_term()) != 0 || sgn(g.q.constant_term()) != 0)
    throw GermError(GermErrorKind::InvalidGerm, "p and q must vanish at the origin");
  return g;
}

FrontalVerdict check_frontal(const MapGerm& g, int jet_cap) {
  const Poly py = partial_derivative(g.p, "y");
  const Poly qy = partial_derivative(g.q, "y");
  if (py.is_zero() && qy.is_zero())
    throw GermError(GermErrorKind::NotGenericallyImmersive, "not generically immersive: p_y = q_y = 0");
  FrontalVerdict v;
  v.division = local_divisibility(py, qy, jet_cap);
  if (v.division.divides()) {
    v.frontal = true;
    return v;
  }
  LocalDivisibility other = local_divisibility(qy, py, jet_cap);
  if (other.divides()) {
    v.frontal = true;
    v.swapped = true;
    v.division = std::move(other);
  }
  return v;
}

namespace {

Poly embed_xy(const Poly& f) { return f.embed(xy_vars()); }

DoublePointCurve double_point_curve_oriented(const MapGerm& g, const Poly& py, int jet_cap) {
  const Poly P = divided_difference(g.p);
  const Poly Q = divided_difference(g.q);
  if (P.is_zero() || Q.is_zero())
    throw GermError(GermErrorKind::NotGenericallyInjective, "not generically injective: lambda = 0");
  const int yp = 2;
  Poly lambda;
  if (P.degree_in(yp) == 0 && Q.degree_in(yp) == 0) lambda = Poly::constant(xyy_vars(), 1);
  else lambda = resultant(P, Q, "y'");
  if (lambda.is_zero())
    throw GermError(GermErrorKind::NotGenericallyInjective, "not generically injective: lambda = 0");
  lambda = embed_xy(lambda);

  DoublePointCurve out;
  out.lambda = normalize_up_to_unit(lambda);
  const LocalDivisibility div = local_divisibility(py * py, out.lambda, jet_cap);
  if (!div.divides())
    throw GermError(GermErrorKind::TheoremViolated,
                    "frontal divisibility theorem violated: p_y^2 does not divide lambda");
  out.tau = normalize_up_to_unit(div.mu_numerator);
  return out;
}

}  // namespace

DoublePointCurve double_point_curve(const MapGerm& g, int jet_cap) {
  return double_point_curve_oriented(g, partial_derivative(g.p, "y"), jet_cap);
}

std::pair<Poly, Poly> alpha_pair(const MapGerm& g) {
  std::pair<Poly, Poly> out{second_divided_difference(g.p), second_divided_difference(g.q)};
  const Poly step = Poly::variable(xyy_vars(), "y'") - Poly::variable(xyy_vars(), "y");
  for (const auto& [f, a] : {std::pair{&g.p, &out.first}, std::pair{&g.q, &out.second}}) {
    Poly residual = divided_difference(*f) - partial_derivative(*f, "y").embed(xyy_vars()) - step * *a;
    if (!residual.is_zero()) throw Error("second divided difference identity failed");
  }
  return out;
}

FrontalData analyze_frontal(const MapGerm& g, int jet_cap) {
  FrontalData d;
  d.verdict = check_frontal(g, jet_cap);
  if (!d.verdict.frontal) {
    std::string msg = "not frontal";
    if (d.verdict.division.obstruction_order >= 0)
      msg += ": obstruction " + to_string(d.verdict.division.obstruction) + " at order " +
             std::to_string(d.verdict.division.obstruction_order);
    throw GermError(GermErrorKind::NotFrontal, msg);
  }
  d.germ = g;
  if (d.verdict.swapped) std::swap(d.germ.p, d.germ.q);
  const Poly& p = d.germ.p;
  const Poly& q = d.germ.q;
  d.mu_numerator = d.verdict.division.mu_numerator;
  d.mu_denominator = d.verdict.division.mu_denominator;
  d.cuspidal = partial_derivative(p, "y");

  const Poly px = partial_derivative(p, "x");
  const Poly qx = partial_derivative(q, "x");
  const Poly qy = partial_derivative(q, "y");
  if (d.mu_denominator * qy != d.mu_numerator * d.cuspidal)
    throw Error("frontal ratio does not satisfy q_y = mu p_y");
  d.nu = {d.mu_numerator * px - d.mu_denominator * qx, -d.mu_numerator, d.mu_denominator};

  const DoublePointCurve dp = double_point_curve_oriented(d.germ, d.cuspidal, jet_cap);
  d.lambda = dp.lambda;
  d.tau = dp.tau;
  std::tie(d.alpha, d.alpha_prime) = alpha_pair(d.germ);
  return d;
}

namespace {

// Reducedness at the origin of the curve f = 0 (empty curves count as reduced).
Tri reduced_at_origin(const Poly& f) {
  if (sgn(f.constant_term()) != 0) return Tri::Yes;
  return has_repeated_factor_through_origin(f) ? Tri::No : Tri::Yes;
}

// Finite colength of (a, b) in O_2, with an exact fallback when the cap is hit.
Tri isolated(const ColengthResult& r, const Poly& a, const Poly& b) {
  if (r.finite) return Tri::Yes;
  return share_factor_through_origin(a, b) ? Tri::No : Tri::Undetermined;
}

}  // namespace

FinitenessReport finiteness_checks(const FrontalData& d, int jet_cap) {
  FinitenessReport r;
  const Poly& py = d.cuspidal;
  // mu_y up to the unit 1/den^2.
  const Poly& num = d.mu_numerator;
  const Poly& den = d.mu_denominator;
  const Poly mu_y = partial_derivative(num, "y") * den - num * partial_derivative(den, "y");
  r.vpmu = colength({py, mu_y}, jet_cap);
  r.vpmu_isolated = isolated(r.vpmu, py, mu_y);

  const Poly g = py * d.tau;
  const Poly gx = partial_derivative(g, "x"), gy = partial_derivative(g, "y");
  r.critical = colength({gx, gy}, jet_cap);
  r.critical_isolated = isolated(r.critical, gx, gy);
  // lambda/p_y nonzero at the origin: an embedding with no double points there.
  if (sgn(g.constant_term()) != 0) r.critical_isolated = Tri::Yes;

  r.c_reduced = reduced_at_origin(py);
  r.dplus_reduced = reduced_at_origin(d.tau);
  r.f_finite = r.vpmu_isolated == Tri::Yes ? r.critical_isolated : Tri::Undetermined;
  return r;
}

}  // namespace frontal
