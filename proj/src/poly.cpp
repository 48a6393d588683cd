#include "frontal/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frontal {

int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw Error("at most three variables are supported");
}

Poly Poly::constant(std::vector<std::string> vars, const Scalar& c) {
  Poly p(std::move(vars));
  p.add_term(Exponent{}, c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::string_view name) {
  Poly p(std::move(vars));
  Exponent e{};
  e[p.require_var(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Poly Poly::monomial(std::vector<std::string> vars, const Exponent& e, const Scalar& c) {
  Poly p(std::move(vars));
  for (std::size_t i = p.nvars(); i < kMaxVars; ++i)
    if (e[i] != 0) throw Error("exponent slot outside the variable list");
  p.add_term(e, c);
  return p;
}

int Poly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

int Poly::require_var(std::string_view name) const {
  int i = var_index(name);
  if (i < 0) throw Error("unknown variable '" + std::string(name) + "'");
  return i;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Scalar Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, frontal::total_degree(e));
  return d;
}

int Poly::order() const {
  if (terms_.empty()) return -1;
  int d = frontal::total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, frontal::total_degree(e));
  return d;
}

int Poly::order_in(int var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

std::pair<Exponent, Scalar> Poly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_)
    if (frontal::total_degree(e) == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_)
    if (frontal::total_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_) {
    // The zero polynomial with an empty variable list acts as a neutral value.
    if (vars_.empty() && terms_.empty()) return;
    if (o.vars_.empty() && o.terms_.empty()) return;
    throw Error("polynomials over different variable lists");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.vars_.empty() ? b.vars_ : a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly Poly::embed(const std::vector<std::string>& vars) const {
  Poly r(vars);
  std::array<int, kMaxVars> target{-1, -1, -1};
  for (std::size_t i = 0; i < vars_.size(); ++i) target[i] = r.var_index(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponent ne{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0) throw Error("variable '" + vars_[i] + "' missing from target list");
      ne[target[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
  check_compatible(value);
  Poly r(vars_);
  std::vector<Poly> powers{constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
    Exponent rest = e;
    rest[var] = 0;
    r += monomial(vars_, rest, c) * powers[e[var]];
  }
  return r;
}

Poly Poly::compose(const std::vector<Poly>& values) const {
  if (values.size() != vars_.size()) throw Error("compose: one value per variable required");
  const auto& out_vars = values.empty() ? vars_ : values.front().vars();
  std::vector<std::vector<Poly>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(constant(out_vars, 1));
  Poly r(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(out_vars, c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * values[i]);
      if (e[i] > 0) t *= pw[e[i]];
    }
    r += t;
  }
  return r;
}

Poly Poly::evaluate(int var, const Scalar& value) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[var] = 0;
    Scalar v = c;
    for (int k = 0; k < e[var]; ++k) v *= value;
    r.add_term(ne, v);
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  std::vector<Poly> out(std::max(0, degree_in(var)) + 1, Poly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[var] = 0;
    out[e[var]].add_term(ne, c);
  }
  return out;
}

Poly Poly::shifted(int var, int k) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[var] += k;
    r.terms_.emplace_hint(r.terms_.end(), ne, c);
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(const Scalar& c) { return c.get_str(); }

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponent, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    bool unit_coeff = mag == 1;
    if (!unit_coeff || total_degree(e) == 0) factors.push_back(mag.get_str());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? f.vars()[i] : f.vars()[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Poly partial_derivative(const Poly& f, std::string_view var) {
  int v = f.require_var(var);
  Poly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) continue;
    Exponent ne = e;
    ne[v] -= 1;
    r.add_term(ne, c * e[v]);
  }
  return r;
}

const std::vector<std::string>& xy_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

const std::vector<std::string>& xyy_vars() {
  static const std::vector<std::string> v{"x", "y", "y'"};
  return v;
}

Poly divided_difference(const Poly& f) {
  Poly g = f.embed(xy_vars());
  Poly r(xyy_vars());
  for (const auto& [e, c] : g.terms()) {
    for (int i = 0; i < e[1]; ++i) r.add_term(Exponent{e[0], i, e[1] - 1 - i}, c);
  }
  return r;
}

Poly second_divided_difference(const Poly& f) {
  Poly g = f.embed(xy_vars());
  Poly fy = partial_derivative(g, "y").embed(xyy_vars());
  Poly y = Poly::variable(xyy_vars(), "y");
  Poly yp = Poly::variable(xyy_vars(), "y'");
  return exact_quotient(divided_difference(g) - fy, yp - y);
}

Poly resultant(const Poly& f, const Poly& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw Error("resultant of a zero polynomial");
  if (f.vars() != g.vars()) throw Error("resultant: variable lists differ");
  int v = f.require_var(var);
  const int m = f.degree_in(v);
  const int n = g.degree_in(v);
  if (m == 0 && n == 0) throw Error("resultant: both polynomials are constant in " + std::string(var));
  const auto fc = f.coefficients_in(v);
  const auto gc = g.coefficients_in(v);
  const int size = m + n;
  std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly(f.vars())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[i][i + j] = fc[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[n + i][i + j] = gc[n - j];

  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  Poly prev = Poly::constant(f.vars(), 1);
  for (int k = 0; k < size; ++k) {
    if (mat[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (!mat[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly(f.vars());
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Poly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mat[i][j] = k == 0 ? num : exact_quotient(num, prev);
      }
      mat[i][k] = Poly(f.vars());
    }
    prev = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

}  // namespace

Division exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const auto& vars = f.vars().empty() ? g.vars() : f.vars();
  Poly rem = f;
  Poly quot(vars);
  const auto [ge, gc] = g.leading_term();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading_term();
    if (!divides(ge, re)) return NotDivisible{Poly::monomial(vars, re, rc)};
    Exponent qe{re[0] - ge[0], re[1] - ge[1], re[2] - ge[2]};
    Scalar qc = rc / gc;
    quot.add_term(qe, qc);
    for (const auto& [e, c] : g.terms())
      rem.add_term(Exponent{e[0] + qe[0], e[1] + qe[1], e[2] + qe[2]}, -qc * c);
  }
  return quot;
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto d = exact_divide(f, g);
  if (auto* q = std::get_if<Poly>(&d)) return std::move(*q);
  throw Error("inexact division: " + to_string(std::get<NotDivisible>(d).obstructed_term) +
              " is not divisible by the leading term of " + to_string(g));
}

Poly normalize_up_to_unit(const Poly& f) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(f.leading_term().second) < 0) factor = -factor;
  return f * factor;
}

bool equal_up_to_unit(const Poly& f, const Poly& g) {
  return normalize_up_to_unit(f) == normalize_up_to_unit(g);
}

namespace {

int main_variable(const Poly& f, const Poly& g) {
  for (int v = static_cast<int>(std::max(f.nvars(), g.nvars())) - 1; v >= 0; --v) {
    if (!f.is_zero() && f.degree_in(v) > 0) return v;
    if (!g.is_zero() && g.degree_in(v) > 0) return v;
  }
  return -1;
}

Poly gcd_rec(const Poly& f, const Poly& g);

Poly content_in(const Poly& f, int v) {
  Poly c(f.vars());
  for (const auto& coeff : f.coefficients_in(v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff : gcd_rec(c, coeff);
    if (c.is_constant()) return Poly::constant(f.vars(), 1);
  }
  return c;
}

Poly primitive_part(const Poly& f, int v) {
  if (f.is_zero()) return f;
  return exact_quotient(f, content_in(f, v));
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  const int db = b.degree_in(v);
  const Poly lb = b.coefficients_in(v)[db];
  Poly r = a;
  int steps = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Poly lr = r.coefficients_in(v)[dr];
    r = lb * r - lr.shifted(v, dr - db) * b;
    --steps;
  }
  if (steps > 0 && !r.is_zero()) r *= lb.pow(static_cast<unsigned>(steps));
  return r;
}

Poly gcd_rec(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const int v = main_variable(f, g);
  if (v < 0) return Poly::constant(f.vars(), 1);
  Poly cf = content_in(f, v);
  Poly cg = content_in(g, v);
  Poly c = gcd_rec(cf, cg);
  Poly a = exact_quotient(f, cf);
  Poly b = exact_quotient(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    if (b.is_zero()) break;
    if (b.degree_in(v) == 0) {
      a = Poly::constant(f.vars(), 1);
      break;
    }
    Poly r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive_part(r, v);
  }
  return normalize_up_to_unit(c * primitive_part(a, v));
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (!f.is_zero() && !g.is_zero() && f.vars() != g.vars())
    throw Error("gcd: variable lists differ");
  return normalize_up_to_unit(gcd_rec(f, g));
}

bool has_repeated_factor_through_origin(const Poly& f) {
  if (f.is_zero()) return true;
  Poly d = f;
  for (const auto& v : f.vars()) d = gcd(d, partial_derivative(f, v));
  return !d.is_constant() && sgn(d.constant_term()) == 0;
}

bool share_factor_through_origin(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.is_zero() || sgn(g.constant_term()) == 0;
  if (g.is_zero()) return sgn(f.constant_term()) == 0;
  Poly d = gcd(f, g);
  return !d.is_constant() && sgn(d.constant_term()) == 0;
}

}  // namespace frontal
