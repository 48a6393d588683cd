#include "frontal/fold.hpp"

namespace frontal {

const std::vector<std::string>& fold_vars() {
  static const std::vector<std::string> v{"x", "u"};
  return v;
}

std::optional<FoldGerm> detect_fold(const MapGerm& g) {
  if (g.p != Poly::variable(xy_vars(), "y").pow(2) || g.q.is_zero()) return std::nullopt;
  Poly h(fold_vars());
  bool u_divides = true;
  for (const auto& [e, c] : g.q.terms()) {
    if (e[1] % 2 == 0) return std::nullopt;
    const int ue = (e[1] - 1) / 2;
    if (ue == 0) u_divides = false;
    h.add_term(Exponent{e[0], ue, 0}, c);
  }
  if (!u_divides) return FoldGerm{h, false};
  Poly reduced(fold_vars());
  for (const auto& [e, c] : h.terms()) reduced.add_term(Exponent{e[0], e[1] - 1, 0}, c);
  return FoldGerm{reduced, true};
}

MapGerm realise(const FoldGerm& f, const std::string& name) {
  const auto& xy = xy_vars();
  const Poly y = Poly::variable(xy, "y");
  const Poly lifted = f.h.embed(fold_vars()).compose({Poly::variable(xy, "x"), y.pow(2)});
  return make_germ(name, y.pow(2), lifted.shifted(1, f.frontalised ? 3 : 1));
}

MapGerm frontalise(const FoldGerm& f, bool* already) {
  if (already) *already = f.frontalised;
  return realise(FoldGerm{f.h, true});
}

ColengthResult fold_codim(const FoldGerm& f, int cap) {
  if (f.h.is_zero()) throw GermError(GermErrorKind::NonFinite, "fold datum h = 0");
  return colength_fold_module(f.h.embed(fold_vars()), cap);
}

namespace {

// h = a*x^i1*u^j1 + b*x^i2*u^j2 as a sorted pair of exponents.
std::optional<std::pair<Exponent, Exponent>> binomial(const Poly& h) {
  if (h.size() != 2) return std::nullopt;
  auto it = h.terms().begin();
  Exponent a = it->first;
  Exponent b = (++it)->first;
  return std::pair{a, b};
}

bool is(const Exponent& e, int xe, int ue) { return e[0] == xe && e[1] == ue; }

}  // namespace

Classification classify_simple(const MapGerm& g) {
  Classification c;
  c.convention = "mond-table: S_k has h = u + x^(k+1)";
  auto fold = detect_fold(g);
  if (!fold) return c;
  auto bin = binomial(fold->h);
  if (!bin) return c;
  auto try_match = [&](const Exponent& s, const Exponent& t) {
    // a*u + b*x^(k+1)
    if (is(s, 0, 1) && t[1] == 0 && t[0] >= 1) {
      c.family = "S";
      c.k = t[0] - 1;
      return true;
    }
    // a*x^2 + b*u^k, k >= 2
    if (is(s, 2, 0) && t[0] == 0 && t[1] >= 2) {
      c.family = "B";
      c.k = t[1];
      return true;
    }
    // a*x*u + b*x^k, k >= 3
    if (is(s, 1, 1) && t[1] == 0 && t[0] >= 3) {
      c.family = "C";
      c.k = t[0];
      return true;
    }
    // a*u^2 + b*x^3
    if (is(s, 0, 2) && is(t, 3, 0)) {
      c.family = "F";
      c.k = 4;
      return true;
    }
    return false;
  };
  if (!try_match(bin->first, bin->second) && !try_match(bin->second, bin->first)) return c;
  c.classified = true;
  c.label = fold->frontalised ? c.family + std::to_string(c.k) + "_check"
                              : c.family + "_" + std::to_string(c.k);
  return c;
}

}  // namespace frontal
