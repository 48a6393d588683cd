#pragma once

#include <variant>
#include <vector>

#include "frontal/divisibility.hpp"
#include "frontal/jet.hpp"
#include "frontal/poly.hpp"

namespace frontal {

/// Generators of an ideal in the local ring at the origin of 1, 2 or 3
/// variables. When the generators are only known as jets, `valid_order`
/// is the largest degree to which every generator is correct.
struct IdealSpec {
  std::vector<Poly> generators;
  int valid_order = Jet::kExact;
};

/// dim_Q of a local quotient. When `finite` is false the truncation cap was
/// reached before the sequence d_k stabilised (the quotient may be infinite
/// or merely slow to stabilise); `value` is then the last d_k seen.
struct ColengthResult {
  bool finite = false;
  long value = 0;
  /// Order k at which stabilisation was observed (the quotient is then
  /// spanned by monomials of degree < k).
  int stabilized_at = 0;
  int cap = 0;
  /// Quotient basis in graded-lex order (degree, then exponent vector).
  std::vector<Exponent> monomial_basis;
};

/// Colength of an ideal. d_k = dim O/(I + m^k) is computed for increasing k
/// by exact row reduction of the truncated products m*g; d_k = d_{k+1}
/// forces m^k inside I, and the colength is d_k.
ColengthResult colength(const IdealSpec& ideal, int cap = kDefaultJetCap);
ColengthResult colength(const std::vector<Poly>& generators, int cap = kDefaultJetCap);

/// dim O_2 / (O_2^T + y*M) for the fold datum h(x, u), where O_2^T is the
/// subring of functions of (x, y^2) and M is the O_2^T-module generated by
/// h_x(x,y^2), y^2 h_u(x,y^2) and h(x,y^2). `h` uses variables (x, u).
ColengthResult colength_fold_module(const Poly& h, int cap = kDefaultJetCap);

struct MembershipSolution {
  std::vector<Jet> coefficients;
};
struct NoSolutionAtOrder {
  int order;
};
using MembershipResult = std::variant<MembershipSolution, NoSolutionAtOrder>;

/// Solves target = sum c_i g_i modulo terms above the common truncation
/// order, each c_i a jet in `coefficient_vars` only. Equations are added one
/// weighted degree at a time so the reported order is the first degree at
/// which the system becomes inconsistent.
MembershipResult jet_solve_membership(const Jet& target, const std::vector<Jet>& generators,
                                      const std::vector<std::string>& coefficient_vars);

/// Graded-lex order on exponent vectors (total degree first).
bool graded_less(const Exponent& a, const Exponent& b);

}  // namespace frontal
