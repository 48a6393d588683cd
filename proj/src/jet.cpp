#include "frontal/jet.hpp"

#include <algorithm>

namespace frontal {

Jet::Jet(std::vector<std::string> vars, int order, Weights weights)
    : poly_(std::move(vars)), order_(order), weights_(weights) {
  for (int w : weights_)
    if (w <= 0) throw Error("jet weights must be positive");
}

Jet Jet::from_poly(const Poly& f, int order, Weights weights) {
  Jet j(f.vars(), order, weights);
  for (const auto& [e, c] : f.terms())
    if (j.weighted_degree(e) <= order) j.poly_.add_term(e, c);
  return j;
}

int Jet::weighted_degree(const Exponent& e) const {
  return e[0] * weights_[0] + e[1] * weights_[1] + e[2] * weights_[2];
}

int Jet::weighted_order() const {
  int best = -1;
  for (const auto& [e, c] : poly_.terms()) {
    int d = weighted_degree(e);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

void Jet::add_term(const Exponent& e, const Scalar& c) {
  if (weighted_degree(e) <= order_) poly_.add_term(e, c);
}

Jet Jet::truncated(int order) const {
  Jet j(vars(), std::min(order, order_), weights_);
  for (const auto& [e, c] : poly_.terms())
    if (weighted_degree(e) <= j.order_) j.poly_.add_term(e, c);
  return j;
}

void Jet::check_compatible(const Jet& o) const {
  if (vars() != o.vars()) throw Error("jets over different variable lists");
  if (weights_ != o.weights_) throw Error("jets with different weights");
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.poly_.terms())
    if (weighted_degree(e) <= order_) poly_.add_term(e, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.poly_.terms())
    if (weighted_degree(e) <= order_) poly_.add_term(e, -c);
  return *this;
}

Jet& Jet::operator*=(const Scalar& c) {
  poly_ *= c;
  return *this;
}

Jet Jet::operator-() const {
  Jet j = *this;
  j.poly_ = -j.poly_;
  return j;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  const int order = std::min(a.order_, b.order_);
  Jet r(a.vars(), order, a.weights_);
  for (const auto& [ea, ca] : a.poly_.terms()) {
    const int da = a.weighted_degree(ea);
    if (da > order) continue;
    for (const auto& [eb, cb] : b.poly_.terms()) {
      if (da + a.weighted_degree(eb) > order) continue;
      r.poly_.add_term(Exponent{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

Jet Jet::inverse() const {
  const Scalar c0 = poly_.constant_term();
  if (sgn(c0) == 0) throw Error("jet inverse needs a nonzero constant term");
  if (order_ >= kExact) throw Error("jet inverse needs a finite truncation order");
  // 1/(c0 (1 - u)) = (1/c0) * sum u^k with u = 1 - f/c0 of positive order.
  Jet u(vars(), order_, weights_);
  u -= *this * Scalar(1 / c0);
  u.poly_.add_term(Exponent{}, 1);
  Jet sum(vars(), order_, weights_);
  sum.poly_.add_term(Exponent{}, 1);
  Jet power = sum;
  const int step = u.weighted_order();
  if (step > 0) {
    for (int k = step; k <= order_; k += step) {
      power = power * u;
      power = power.truncated(order_);
      if (power.is_zero()) break;
      sum += power;
    }
  }
  sum *= Scalar(1 / c0);
  return sum;
}

}  // namespace frontal
