#pragma once

#include <limits>

#include "frontal/poly.hpp"

namespace frontal {

/// Weight vector for a filtration; the default gives the total degree.
using Weights = std::array<int, kMaxVars>;
inline constexpr Weights kUnitWeights{1, 1, 1};

/// Truncated power series: every stored term has weighted degree <= order().
/// Products and sums truncate at the smaller operand order.
class Jet {
public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  Jet() = default;
  Jet(std::vector<std::string> vars, int order, Weights weights = kUnitWeights);

  /// Truncation of a polynomial at the given order.
  static Jet from_poly(const Poly& f, int order, Weights weights = kUnitWeights);

  const std::vector<std::string>& vars() const { return poly_.vars(); }
  int order() const { return order_; }
  const Weights& weights() const { return weights_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  int weighted_degree(const Exponent& e) const;
  /// Lowest weighted degree of a stored term, or -1.
  int weighted_order() const;

  void add_term(const Exponent& e, const Scalar& c);

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Scalar& c);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Scalar& c) { return a *= c; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet operator-() const;

  /// Multiplicative inverse; requires a nonzero constant term and a finite order.
  Jet inverse() const;

  bool operator==(const Jet& o) const {
    return order_ == o.order_ && weights_ == o.weights_ && poly_ == o.poly_;
  }

private:
  Poly poly_;
  int order_ = kExact;
  Weights weights_ = kUnitWeights;

  void check_compatible(const Jet& o) const;
};

}  // namespace frontal
