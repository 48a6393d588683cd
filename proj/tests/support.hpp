#pragma once

#include <random>
#include <string>
#include <vector>

#include "frontal/parser.hpp"
#include "frontal/poly.hpp"

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<frontal::Poly> {
  static String convert(const frontal::Poly& p) { return frontal::to_string(p).c_str(); }
};
}  // namespace doctest

namespace testing_support {

using frontal::Exponent;
using frontal::Poly;
using frontal::Scalar;

inline Poly P(const std::string& s) { return frontal::parse_expression(s); }
inline Poly P(const std::string& s, const std::vector<std::string>& vars) {
  return frontal::parse_expression(s, vars);
}

/// Deterministic random polynomials for property tests.
class PolyGen {
public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Scalar coefficient() {
    int n = 0;
    while (n == 0) n = integer(-5, 5);
    Scalar c(n, integer(1, 3));
    c.canonicalize();
    return c;
  }

  /// Up to `terms` random terms of total degree in [min_deg, max_deg].
  Poly poly(const std::vector<std::string>& vars, int terms, int min_deg, int max_deg) {
    Poly p(vars);
    for (int i = 0; i < terms; ++i) {
      Exponent e{};
      int d = integer(min_deg, max_deg);
      for (std::size_t v = 0; v + 1 < vars.size(); ++v) {
        e[v] = integer(0, d);
        d -= e[v];
      }
      e[vars.size() - 1] = d;
      p.add_term(e, coefficient());
    }
    return p;
  }

  std::mt19937& rng() { return rng_; }

private:
  std::mt19937 rng_;
};

}  // namespace testing_support
