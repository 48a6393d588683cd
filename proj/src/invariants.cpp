#include "frontal/invariants.hpp"

#include <numeric>

#include "frontal/fold.hpp"

namespace frontal {

namespace {

void note_failure(SkwCounts& c, const ColengthResult& r, const char* name) {
  if (r.finite) return;
  if (!c.failure.empty()) c.failure += ",";
  c.failure += name;
}

bool is_integer(const Scalar& s) { return s.get_den() == 1; }

}  // namespace

std::array<long, 4> recombine(const SKTW& s) {
  return {s.S, 2 * s.S + s.K + s.W, 2 * s.S + s.K, s.T + s.S + s.K};
}

SkwCounts skw_counts(const FrontalData& d, int cap) {
  SkwCounts c;
  const Poly& py = d.cuspidal;
  const Poly pyy = partial_derivative(py, "y");
  c.P3 = colength({py, pyy}, cap);
  c.PT = colength({py, d.tau}, cap);
  c.PAA = colength({py.embed(xyy_vars()), d.alpha, d.alpha_prime}, cap);
  try {
    c.F3 = fitting_F3(d.germ, cap).F3;
  } catch (const GermError&) {
    c.F3 = ColengthResult{};
    c.F3.cap = cap;
  }
  note_failure(c, c.P3, "P3");
  note_failure(c, c.PT, "PT");
  note_failure(c, c.PAA, "PAA'");
  note_failure(c, c.F3, "F3");
  c.complete = c.failure.empty();
  if (!c.complete) return c;

  SKTW& s = c.sktw;
  s.S = c.P3.value;
  s.K = c.PAA.value - 2 * s.S;
  s.W = c.PT.value - c.PAA.value;
  s.T = c.F3.value - c.PAA.value + c.P3.value;
  if (recombine(s) != std::array<long, 4>{c.P3.value, c.PT.value, c.PAA.value, c.F3.value})
    throw Error("S, K, T, W do not reproduce the colengths");
  c.nonnegative = s.S >= 0 && s.K >= 0 && s.T >= 0 && s.W >= 0;
  return c;
}

SkwCounts skw_counts(const MapGerm& g, int cap) { return skw_counts(analyze_frontal(g, cap), cap); }

std::optional<long> milnor_plane(const Poly& g, int cap) {
  if (g.is_zero()) throw Error("milnor number of the zero function");
  if (sgn(g.constant_term()) != 0) throw Error("curve does not pass through the origin");
  const Poly f = g.embed(xy_vars());
  const ColengthResult r = colength({partial_derivative(f, "x"), partial_derivative(f, "y")}, cap);
  if (!r.finite) return std::nullopt;
  return r.value;
}

MararMond marar_mond_eval(const SKTW& s, long mu_c, long mu_d) {
  MararMond m;
  m.image_c = Scalar(2 * s.S + mu_c);
  m.image_d = Scalar(2 * s.K + 2 * s.T + mu_d - s.W - s.S + 1, 2);
  m.image_d.canonicalize();
  return m;
}

FrontalMilnor frontal_milnor(const SKTW& s, long mu_d) {
  FrontalMilnor f;
  f.via_image = marar_mond_eval(s, 0, mu_d).image_d - s.S - s.W + s.T + 1;
  Scalar half(mu_d + 3 * (1 - s.S - s.W), 2);
  half.canonicalize();
  f.via_source = half + s.K + 2 * s.T;
  return f;
}

const char* to_string(DReading r) { return r == DReading::DPlus ? "dplus" : "full"; }

QuasiHomogeneity quasihomogeneous_test(const MapGerm& g) {
  // Constraint vectors (di, dj) with di*w_x + dj*w_y = 0.
  std::vector<std::array<long, 2>> rows;
  for (const Poly* f : {&g.p, &g.q}) {
    if (f->is_zero()) continue;
    const Exponent first = f->terms().begin()->first;
    for (const auto& [e, c] : f->terms())
      if (e != first) rows.push_back({e[0] - first[0], e[1] - first[1]});
  }
  QuasiHomogeneity out;
  long a = 1, b = 1;
  const std::array<long, 2>* lead = nullptr;
  for (const auto& r : rows)
    if (r[0] != 0 || r[1] != 0) {
      lead = &r;
      break;
    }
  if (lead) {
    for (const auto& r : rows)
      if (r[0] * (*lead)[1] - r[1] * (*lead)[0] != 0) return out;
    a = (*lead)[1];
    b = -(*lead)[0];
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    if (a <= 0 || b <= 0) return out;
    const long k = std::gcd(a, b);
    a /= k;
    b /= k;
  }
  out.qh = true;
  out.w_x = a;
  out.w_y = b;
  auto degree = [&](const Poly& f) -> long {
    if (f.is_zero()) return 0;
    const Exponent& e = f.terms().begin()->first;
    return a * e[0] + b * e[1];
  };
  out.degrees = {a, degree(g.p), degree(g.q)};
  return out;
}

ConjectureReport conjecture_report(const InvariantReport& r) {
  ConjectureReport c;
  c.label = "experimental: mu_F depends on the reading of mu(D)";
  c.codim_computed = r.codim.has_value();
  c.codim = r.codim.value_or(0);
  c.qh = r.qh.qh;
  for (std::size_t i = 0; i < 2; ++i) {
    const MuFReading& m = r.readings[i];
    std::string& v = c.verdicts[i];
    if (!c.codim_computed) v = "codimension not computed";
    else if (!m.computed) v = "mu_F not computed";
    else if (!m.integral) v = "mu_F non-integral";
    else if (m.mu_f < c.codim) v = "mu_F < codim";
    else if (m.mu_f == c.codim) v = c.qh ? "consistent: equality, quasihomogeneous" : "inconsistent: equality, not quasihomogeneous";
    else v = c.qh ? "inconsistent: strict, quasihomogeneous" : "consistent: strict, not quasihomogeneous";
  }
  return c;
}

namespace {

MuFReading evaluate_reading(DReading which, const Poly& curve, const SkwCounts& counts, int cap) {
  MuFReading m;
  m.reading = which;
  m.curve = curve;
  if (sgn(curve.constant_term()) != 0) {
    m.computed = true;
    m.note = "curve empty at the origin: vanishing homology trivial, mu_F = 0";
    m.mu_f = 0;
    return m;
  }
  m.applicable = true;
  if (!counts.complete) {
    m.note = "colengths reached the cap: " + counts.failure;
    return m;
  }
  const auto mu = milnor_plane(curve, cap);
  if (!mu) {
    m.note = "mu(D) reached the cap (non-reduced curve)";
    return m;
  }
  m.computed = true;
  m.mu_d = *mu;
  m.image_d = marar_mond_eval(counts.sktw, 0, m.mu_d).image_d;
  const FrontalMilnor f = frontal_milnor(counts.sktw, m.mu_d);
  if (f.via_image != f.via_source) throw Error("the two mu_F expressions disagree");
  m.via_image = f.via_image;
  m.via_source = f.via_source;
  m.mu_f = f.via_source;
  m.integral = is_integer(m.image_d) && is_integer(m.mu_f);
  if (!m.integral) m.note = "non-integral";
  return m;
}

}  // namespace

InvariantReport compute_invariants(const FrontalData& d, int cap) {
  InvariantReport r;
  r.counts = skw_counts(d, cap);
  const Poly& py = d.cuspidal;
  r.c_empty = sgn(py.constant_term()) != 0;
  if (!r.c_empty) r.mu_c = milnor_plane(py, cap);
  if (r.counts.complete && (r.c_empty || r.mu_c))
    r.mu_image_c = marar_mond_eval(r.counts.sktw, r.mu_c.value_or(0), 0).image_c;
  r.readings[0] = evaluate_reading(DReading::DPlus, d.tau, r.counts, cap);
  r.readings[1] = evaluate_reading(DReading::Full, normalize_up_to_unit(py * d.tau), r.counts, cap);
  if (auto fold = detect_fold(d.germ); fold && fold->frontalised) {
    const ColengthResult c = fold_codim(*fold, cap);
    if (c.finite) r.codim = c.value;
  }
  r.qh = quasihomogeneous_test(d.germ);
  r.conjecture = conjecture_report(r);
  return r;
}

}  // namespace frontal
