#include "frontal/fitting.hpp"

#include <functional>
#include <map>

#include "frontal/jet.hpp"

namespace frontal {

const std::vector<std::string>& target_vars() {
  static const std::vector<std::string> v{"X", "Y", "Z"};
  return v;
}

namespace {

// ord_y f(0, y), or -1 when f(0, y) = 0.
int order_on_axis(const Poly& f) { return f.evaluate(0, 0).order(); }

// Orientation with ord p(0,y) = d.
std::pair<MapGerm, bool> oriented(const MapGerm& g) {
  const int op = order_on_axis(g.p), oq = order_on_axis(g.q);
  if (op < 0 && oq < 0)
    throw GermError(GermErrorKind::NonFinite, "non-finite germ: p(0,y) = q(0,y) = 0");
  if (op < 0 || (oq >= 0 && oq < op)) {
    MapGerm s = g;
    std::swap(s.p, s.q);
    return {s, true};
  }
  return {g, false};
}

Poly drop_xy_above(const Poly& f, int max) {
  Poly out(f.vars());
  for (const auto& [e, c] : f.terms())
    if (e[0] + e[1] <= max) out.add_term(e, c);
  return out;
}

// f(values) keeping total degree <= max; values share one variable list.
Poly compose_truncated(const Poly& f, const std::vector<Poly>& values, int max) {
  const auto& vars = values.front().vars();
  std::vector<std::vector<Poly>> powers(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    int need = 0;
    for (const auto& [e, c] : f.terms()) need = std::max(need, e[v]);
    powers[v].push_back(Poly::constant(vars, 1));
    for (int k = 1; k <= need; ++k) powers[v].push_back((powers[v].back() * values[v]).truncated(max));
  }
  Poly out(vars);
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(vars, c);
    for (std::size_t v = 0; v < values.size(); ++v)
      if (e[v] > 0) t = (t * powers[v][e[v]]).truncated(max);
    out += t;
  }
  return out;
}

// Memoised cofactor expansion over row/column bitmasks.
class MinorTable {
public:
  template <class Trunc>
  MinorTable(const std::vector<std::vector<Poly>>& a, Trunc trunc) : a_(a), trunc_(trunc) {}

  Poly minor(unsigned rows, unsigned cols) {
    const unsigned long key = (static_cast<unsigned long>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly out;
    if (rows == 0) {
      out = Poly::constant(target_vars(), 1);
    } else {
      out = Poly(target_vars());
      const int r = __builtin_ctz(rows);
      int sign = 1;
      for (int c = 0; c < static_cast<int>(a_.size()); ++c) {
        if (!(cols & (1u << c))) continue;
        const Poly& entry = a_[r][c];
        if (!entry.is_zero()) {
          Poly t = trunc_(entry * minor(rows & ~(1u << r), cols & ~(1u << c)));
          if (sign > 0) out += t;
          else out -= t;
        }
        sign = -sign;
      }
    }
    memo_.emplace(key, out);
    return out;
  }

private:
  const std::vector<std::vector<Poly>>& a_;
  std::function<Poly(const Poly&)> trunc_;
  std::map<unsigned long, Poly> memo_;
};

}  // namespace

int multiplicity(const MapGerm& g) { return order_on_axis(oriented(g).first.p); }

PresentationMatrix presentation(const MapGerm& g0, int jet_order) {
  if (jet_order < 0) throw Error("presentation needs a nonnegative jet order");
  auto [g, swapped] = oriented(g0);
  const int d = order_on_axis(g.p);
  const int M = jet_order;
  const auto& xy = xy_vars();
  const Weights w{d, 1, 1};

  // p = y^d e(y) + x r(x, y) with e(0) != 0.
  const Poly axis = g.p.evaluate(0, 0);
  const Poly e = exact_quotient(axis, Poly::variable(xy, "y").pow(d));
  const Poly r = exact_quotient(g.p - axis, Poly::variable(xy, "x"));
  const int top = d * (M + 1) - 1;
  const Jet einv = Jet::from_poly(e, top, w).inverse();
  const Jet reinv = Jet::from_poly(r, top, w) * einv;

  PresentationMatrix m;
  m.d = d;
  m.swapped = swapped;
  m.jet_order = M;
  m.Q.assign(d, std::vector<Poly>(d, Poly(target_vars())));

  for (int col = 0; col < d; ++col) {
    // State (a, b) carries a series s standing for X^a Y^b * s.
    std::map<std::pair<int, int>, Jet> level;
    level.emplace(std::pair{0, 0}, Jet::from_poly(g.q.shifted(1, col), top, w));
    for (int L = 0; L <= M && !level.empty(); ++L) {
      const int next_top = d * (M - L) - 1;
      std::map<std::pair<int, int>, Jet> next;
      for (const auto& [ab, s] : level) {
        const auto [a, b] = ab;
        Jet G(xy, next_top, w);
        for (const auto& [ex, c] : s.poly().terms()) {
          if (ex[1] < d) {
            if (a + b + ex[0] <= M) m.Q[ex[1]][col].add_term(Exponent{a + ex[0], b, 0}, c);
          } else {
            G.add_term(Exponent{ex[0], ex[1] - d, 0}, c);
          }
        }
        if (L == M || G.is_zero()) continue;
        // y^d = (Y - x r) / e.
        Jet up = G * einv.truncated(next_top);
        Jet right = -(G * reinv.truncated(next_top));
        auto add = [&](std::pair<int, int> key, Jet j) {
          if (j.is_zero()) return;
          auto it = next.find(key);
          if (it == next.end()) next.emplace(key, std::move(j));
          else it->second += j;
        };
        add({a, b + 1}, std::move(up));
        add({a + 1, b}, std::move(right));
      }
      level = std::move(next);
    }
  }

  m.lambda_pres = m.Q;
  const Poly Z = Poly::variable(target_vars(), "Z");
  for (int i = 0; i < d; ++i) m.lambda_pres[i][i] -= Z;
  return m;
}

bool presentation_is_faithful(const MapGerm& g0, const PresentationMatrix& m) {
  const MapGerm g = m.swapped ? MapGerm{g0.name, g0.q, g0.p} : g0;
  const auto& xy = xy_vars();
  const std::vector<Poly> values{Poly::variable(xy, "x"), g.p, g.q};
  for (int i = 0; i < m.d; ++i) {
    Poly sum = -(g.q.shifted(1, i).truncated(m.jet_order));
    for (int j = 0; j < m.d; ++j)
      sum += compose_truncated(m.Q[j][i], values, m.jet_order).shifted(1, j).truncated(m.jet_order);
    if (!sum.is_zero()) return false;
  }
  return true;
}

Poly fitting_F0(const PresentationMatrix& m) {
  const int M = m.jet_order;
  MinorTable table(m.lambda_pres, [M](const Poly& f) { return drop_xy_above(f, M); });
  const unsigned all = (1u << m.d) - 1;
  return table.minor(all, all);
}

std::vector<Poly> minors(const PresentationMatrix& m, int k) {
  if (k < 0 || k > m.d) throw Error("minor size out of range");
  const int M = m.jet_order;
  MinorTable table(m.lambda_pres, [M](const Poly& f) { return f.truncated(M); });
  std::vector<unsigned> subsets;
  for (unsigned s = 0; s < (1u << m.d); ++s)
    if (__builtin_popcount(s) == k) subsets.push_back(s);
  std::vector<Poly> out;
  for (unsigned rows : subsets)
    for (unsigned cols : subsets) {
      Poly f = table.minor(rows, cols);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  return out;
}

bool image_equation_vanishes(const MapGerm& g0, const PresentationMatrix& m, const Poly& F0) {
  const MapGerm g = m.swapped ? MapGerm{g0.name, g0.q, g0.p} : g0;
  const auto& xy = xy_vars();
  return compose_truncated(F0, {Poly::variable(xy, "x"), g.p, g.q}, m.jet_order).is_zero();
}

FittingResult fitting_F3(const MapGerm& g, int max_jet) {
  constexpr int kStart = 6, kStep = 5;
  FittingResult out;
  const int d = multiplicity(g);
  auto build = [&](int M) {
    out.presentation = presentation(g, M);
    out.F0 = fitting_F0(out.presentation);
    out.F0_vanishes = image_equation_vanishes(g, out.presentation, out.F0);
  };
  if (d <= 2) {
    build(kStart);
    out.F2_generators = {Poly::constant(target_vars(), 1)};
    out.F3 = colength(out.F2_generators, max_jet);
    return out;
  }
  auto attempt = [&](int M) {
    PresentationMatrix pm = presentation(g, M);
    std::vector<Poly> gens = minors(pm, d - 2);
    if (gens.empty()) gens.push_back(Poly(target_vars()));
    return std::pair{colength(IdealSpec{gens, M}, max_jet), gens};
  };
  ColengthResult last;
  for (int M = kStart; M + kStep <= std::max(max_jet, kStart + kStep); M += kStep) {
    auto [r, gens] = attempt(M);
    last = r;
    if (!r.finite) continue;
    auto [confirm, unused] = attempt(M + kStep);
    if (confirm.finite && confirm.value == r.value) {
      build(M);
      out.F2_generators = std::move(gens);
      out.F3 = r;
      out.confirmed_at = M;
      return out;
    }
  }
  build(kStart);
  out.F3 = last;
  return out;
}

}  // namespace frontal
