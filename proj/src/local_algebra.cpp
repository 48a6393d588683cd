#include "frontal/local_algebra.hpp"

#include <algorithm>
#include <map>

namespace frontal {

bool graded_less(const Exponent& a, const Exponent& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

using SparseRow = std::vector<std::pair<int, Scalar>>;

// row -= c * pivot, both sorted by column.
SparseRow subtract_multiple(const SparseRow& row, const Scalar& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -c * pivot[j].second);
      ++j;
    } else {
      Scalar v = row[i].second - c * pivot[j].second;
      if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Row echelon form with the smallest column index as pivot. Stored rows are
// scaled to leading coefficient 1.
class Echelon {
public:
  explicit Echelon(int ncols) : pivot_row_(ncols, -1) {}

  // Reduces the row; returns its pivot column, or -1 if it became zero.
  int insert(SparseRow row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      const int p = pivot_row_[lead];
      if (p < 0) break;
      const Scalar c = row.front().second;
      row = subtract_multiple(row, c, rows_[p]);
    }
    if (row.empty()) return -1;
    const Scalar inv = 1 / row.front().second;
    for (auto& [col, v] : row) v *= inv;
    const int lead = row.front().first;
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return lead;
  }

  const std::vector<SparseRow>& rows() const { return rows_; }
  int pivot_row(int col) const { return pivot_row_[col]; }

private:
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
};

void enumerate(int n, int var, int remaining, Exponent& e, std::vector<Exponent>& out) {
  if (var == n) {
    out.push_back(e);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    e[var] = a;
    enumerate(n, var + 1, remaining - a, e, out);
  }
  e[var] = 0;
}

// Monomials of total degree < level in n variables, graded-lex order.
struct MonomialIndex {
  std::vector<Exponent> monomials;
  std::map<Exponent, int> index;

  MonomialIndex(int n, int level) {
    Exponent e{};
    if (level > 0) enumerate(n, 0, level - 1, e, monomials);
    std::sort(monomials.begin(), monomials.end(), graded_less);
    for (int i = 0; i < static_cast<int>(monomials.size()); ++i) index.emplace(monomials[i], i);
  }
};

Exponent add(const Exponent& a, const Exponent& b) {
  return Exponent{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Truncation of m*g below `level`, as a sparse row over the index.
SparseRow product_row(const Exponent& m, const Poly& g, int level, const MonomialIndex& idx) {
  SparseRow row;
  for (const auto& [e, c] : g.terms()) {
    Exponent t = add(m, e);
    if (total_degree(t) >= level) continue;
    row.emplace_back(idx.index.at(t), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

struct LevelOutcome {
  std::vector<long> d;  // d[k] for k = 0..level
  std::vector<bool> is_pivot;
};

LevelOutcome reduce_level(std::vector<SparseRow> rows, const MonomialIndex& idx, int level) {
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) {
    return a.front().first < b.front().first;
  });
  Echelon ech(static_cast<int>(idx.monomials.size()));
  LevelOutcome out;
  out.is_pivot.assign(idx.monomials.size(), false);
  for (auto& r : rows) {
    const int p = ech.insert(std::move(r));
    if (p >= 0) out.is_pivot[p] = true;
  }
  std::vector<long> free_by_degree(level, 0);
  for (std::size_t i = 0; i < idx.monomials.size(); ++i)
    if (!out.is_pivot[i]) ++free_by_degree[total_degree(idx.monomials[i])];
  out.d.assign(level + 1, 0);
  for (int k = 1; k <= level; ++k) out.d[k] = out.d[k - 1] + free_by_degree[k - 1];
  return out;
}

std::vector<int> level_schedule(int cap) {
  std::vector<int> levels;
  for (int k : {4, 8, 16, 32})
    if (k < cap) levels.push_back(k);
  levels.push_back(std::max(cap, 1));
  return levels;
}

// Shared driver: `build_rows` produces the generating rows at a level and
// `gap` is the stabilisation distance (d_k = d_{k+gap} ends the search).
template <class BuildRows>
ColengthResult stabilise(int n, int cap, int gap, BuildRows build_rows) {
  ColengthResult result;
  result.cap = cap;
  for (int level : level_schedule(cap)) {
    MonomialIndex idx(n, level);
    LevelOutcome lv = reduce_level(build_rows(idx, level), idx, level);
    for (int k = 0; k + gap <= level; ++k) {
      if (lv.d[k] != lv.d[k + gap]) continue;
      result.finite = true;
      result.value = lv.d[k];
      result.stabilized_at = k;
      for (std::size_t i = 0; i < idx.monomials.size(); ++i)
        if (!lv.is_pivot[i] && total_degree(idx.monomials[i]) < k)
          result.monomial_basis.push_back(idx.monomials[i]);
      return result;
    }
    result.value = lv.d[level];
    result.stabilized_at = level;
  }
  return result;
}

}  // namespace

ColengthResult colength(const IdealSpec& ideal, int cap) {
  if (ideal.generators.empty()) throw Error("colength of an empty generator list");
  const auto& vars = ideal.generators.front().vars();
  for (const auto& g : ideal.generators)
    if (g.vars() != vars && !g.is_zero()) throw Error("ideal generators over different variables");
  const int n = static_cast<int>(vars.size());
  if (n < 1 || n > 3) throw Error("colength needs 1, 2 or 3 variables");
  if (cap < 1) throw Error("colength cap must be positive");
  int effective_cap = cap;
  if (ideal.valid_order < Jet::kExact) effective_cap = std::min(cap, ideal.valid_order + 1);

  std::vector<Poly> gens;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) gens.push_back(g);

  return stabilise(n, effective_cap, 1, [&](const MonomialIndex& idx, int level) {
    std::vector<SparseRow> rows;
    for (const auto& g : gens) {
      const int o = g.order();
      for (const auto& m : idx.monomials) {
        if (total_degree(m) + o >= level) break;
        SparseRow r = product_row(m, g, level, idx);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
    return rows;
  });
}

ColengthResult colength(const std::vector<Poly>& generators, int cap) {
  return colength(IdealSpec{generators, Jet::kExact}, cap);
}

ColengthResult colength_fold_module(const Poly& h, int cap) {
  const int ix = h.require_var("x");
  const int iu = h.require_var("u");
  if (h.nvars() != 2) throw Error("fold datum must be a polynomial in (x, u)");
  const auto& xy = xy_vars();
  std::vector<Poly> values(2);
  values[ix] = Poly::variable(xy, "x");
  values[iu] = Poly::variable(xy, "y").pow(2);
  auto lift = [&](const Poly& f) { return f.compose(values); };
  const Poly y2 = Poly::variable(xy, "y").pow(2);
  std::vector<Poly> gens{lift(partial_derivative(h, "x")), y2 * lift(partial_derivative(h, "u")),
                         lift(h)};
  // Multiply by y once here; the module rows are then x^a y^(2b) * gens.
  for (auto& g : gens) g = g.shifted(1, 1);

  // m^(k+2) lies in m^T m^k, so Nakayama over O^T needs d_k = d_(k+2).
  return stabilise(2, cap, 2, [&](const MonomialIndex& idx, int level) {
    std::vector<SparseRow> rows;
    for (const auto& m : idx.monomials) {
      if (m[1] % 2 != 0) continue;
      rows.push_back(SparseRow{{idx.index.at(m), Scalar(1)}});
      for (const auto& g : gens) {
        if (g.is_zero() || total_degree(m) + g.order() >= level) continue;
        SparseRow r = product_row(m, g, level, idx);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
    return rows;
  });
}

MembershipResult jet_solve_membership(const Jet& target, const std::vector<Jet>& generators,
                                      const std::vector<std::string>& coefficient_vars) {
  const auto& vars = target.vars();
  const int order = target.order();
  if (order >= Jet::kExact) throw Error("membership needs a finite truncation order");
  for (const auto& g : generators) {
    if (g.vars() != vars) throw Error("membership jets over different variables");
    if (g.weights() != target.weights()) throw Error("membership jets with different weights");
    if (g.order() != order) throw Error("membership jets must share one truncation order");
  }
  std::vector<int> cidx;
  for (const auto& v : coefficient_vars) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw Error("coefficient variable '" + v + "' not among the jet variables");
    cidx.push_back(static_cast<int>(it - vars.begin()));
  }

  // Monomials in the coefficient variables up to the weighted order.
  std::vector<Exponent> cmons;
  {
    Exponent e{};
    auto rec = [&](auto&& self, std::size_t k, int deg) -> void {
      if (k == cidx.size()) {
        cmons.push_back(e);
        return;
      }
      const int w = target.weights()[cidx[k]];
      for (int a = 0; deg + a * w <= order; ++a) {
        e[cidx[k]] = a;
        self(self, k + 1, deg + a * w);
      }
      e[cidx[k]] = 0;
    };
    rec(rec, 0, 0);
  }

  const int nunknowns = static_cast<int>(generators.size() * cmons.size());
  const int rhs = nunknowns;
  std::map<Exponent, SparseRow> equations;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < cmons.size(); ++j) {
      const int unknown = static_cast<int>(i * cmons.size() + j);
      for (const auto& [e, c] : generators[i].poly().terms()) {
        Exponent t = add(cmons[j], e);
        if (target.weighted_degree(t) > order) continue;
        equations[t].emplace_back(unknown, c);
      }
    }
  }
  for (const auto& [e, c] : target.poly().terms()) equations[e].emplace_back(rhs, c);

  std::vector<std::pair<int, SparseRow>> by_degree;
  for (auto& [e, row] : equations) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    by_degree.emplace_back(target.weighted_degree(e), std::move(row));
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  Echelon ech(nunknowns + 1);
  for (auto& [deg, row] : by_degree) {
    if (ech.insert(std::move(row)) == rhs) return NoSolutionAtOrder{deg};
  }

  // Back substitution with free unknowns set to zero.
  std::vector<Scalar> value(nunknowns);
  for (int col = nunknowns - 1; col >= 0; --col) {
    const int p = ech.pivot_row(col);
    if (p < 0) continue;
    Scalar v = 0;
    for (const auto& [c, a] : ech.rows()[p]) {
      if (c == col) continue;
      if (c == rhs) v += a;
      else v -= a * value[c];
    }
    value[col] = v;
  }

  MembershipSolution sol;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Jet c(vars, order, target.weights());
    for (std::size_t j = 0; j < cmons.size(); ++j) {
      const Scalar& v = value[i * cmons.size() + j];
      if (sgn(v) != 0) c.add_term(cmons[j], v);
    }
    sol.coefficients.push_back(std::move(c));
  }
  return sol;
}

}  // namespace frontal
