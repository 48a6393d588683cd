#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace frontal {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Scalar = mpq_class;

inline constexpr std::size_t kMaxVars = 3;
using Exponent = std::array<int, kMaxVars>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial over Q in at most three named variables.
///
/// Terms are keyed by exponent vector; the map never holds a zero
/// coefficient. Exponent slots beyond nvars() are always zero. Two
/// polynomials compare equal only when their variable lists agree.
class Poly {
public:
  using TermMap = std::map<Exponent, Scalar>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars);

  static Poly constant(std::vector<std::string> vars, const Scalar& c);
  static Poly variable(std::vector<std::string> vars, std::string_view name);
  static Poly monomial(std::vector<std::string> vars, const Exponent& e,
                       const Scalar& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Index of a variable, or -1.
  int var_index(std::string_view name) const;
  /// Index of a variable; throws on unknown names.
  int require_var(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coeff(const Exponent& e) const;
  Scalar constant_term() const { return coeff(Exponent{}); }

  int degree_in(int var) const;
  int total_degree() const;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int order() const;
  /// Lowest exponent of `var` among the terms; -1 for zero.
  int order_in(int var) const;

  /// Lexicographically greatest term (first variable most significant).
  std::pair<Exponent, Scalar> leading_term() const;

  Poly homogeneous_part(int degree) const;
  Poly truncated(int max_degree) const;

  void add_term(const Exponent& e, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned n) const;

  /// Re-expresses the polynomial over another variable list. Variables are
  /// matched by name; a variable that occurs with nonzero exponent must be
  /// present in `vars`.
  Poly embed(const std::vector<std::string>& vars) const;

  /// Replaces variable `var` by `value` (a polynomial over the same list).
  Poly substitute(int var, const Poly& value) const;
  /// Simultaneous substitution of every variable; `values[i]` replaces
  /// variable i. All values must share one variable list.
  Poly compose(const std::vector<Poly>& values) const;
  Poly evaluate(int var, const Scalar& value) const;
  Scalar evaluate_at_origin() const { return constant_term(); }

  /// Coefficients of var^0, var^1, ... as polynomials with var removed
  /// (the var slot is set to zero, variable list unchanged).
  std::vector<Poly> coefficients_in(int var) const;

  /// Multiplies by var^k (k >= 0).
  Poly shifted(int var, int k) const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void check_compatible(const Poly& o) const;
};

/// Canonical text, e.g. "y^5 + x^3*y^3" or "-3/2*x*y^2". Terms are listed by
/// descending total degree, ties broken lexicographically (descending).
std::string to_string(const Poly& f);
std::string to_string(const Scalar& c);

// ---------------------------------------------------------------------------
// Derived operations.

Poly partial_derivative(const Poly& f, std::string_view var);

/// Three-variable list used for divided differences.
const std::vector<std::string>& xyy_vars();
const std::vector<std::string>& xy_vars();

/// (f(x,y) - f(x,y')) / (y - y') for f in (x, y); result lives in (x, y, y').
Poly divided_difference(const Poly& f);

/// The polynomial a_f with f[x,y,y'] = f_y(x,y) + (y' - y) * a_f.
Poly second_divided_difference(const Poly& f);

/// Sylvester resultant eliminating `var`, by Bareiss elimination. The
/// Sylvester matrix holds deg_var(g) shifted rows of f followed by
/// deg_var(f) shifted rows of g, coefficients in descending powers of var.
/// The result keeps the variable list of the inputs (var no longer occurs).
Poly resultant(const Poly& f, const Poly& g, std::string_view var);

struct NotDivisible {
  /// Leading term of the remainder that the divisor's leading term failed
  /// to divide.
  Poly obstructed_term;
};
using Division = std::variant<Poly, NotDivisible>;

/// Exact division f / g. Throws Error if g = 0.
Division exact_divide(const Poly& f, const Poly& g);
/// Like exact_divide but throws Error when the division is not exact.
Poly exact_quotient(const Poly& f, const Poly& g);

/// Greatest common divisor over Q, normalised by normalize_up_to_unit.
/// gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

/// Integer coefficients with unit content and positive lex-leading
/// coefficient. Zero stays zero.
Poly normalize_up_to_unit(const Poly& f);

/// True when f and g differ by a nonzero rational factor.
bool equal_up_to_unit(const Poly& f, const Poly& g);

/// True when f has a repeated irreducible factor vanishing at the origin,
/// decided by gcd(f, f_v1, ..., f_vn).
bool has_repeated_factor_through_origin(const Poly& f);

/// True when f and g share a nonconstant factor that vanishes at the origin.
bool share_factor_through_origin(const Poly& f, const Poly& g);

}  // namespace frontal
