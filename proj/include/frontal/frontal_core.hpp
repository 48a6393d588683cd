#pragma once

#include <array>
#include <string>

#include "frontal/divisibility.hpp"
#include "frontal/local_algebra.hpp"
#include "frontal/poly.hpp"

namespace frontal {

enum class GermErrorKind {
  InvalidGerm,
  NotGenericallyImmersive,
  NotFrontal,
  NotGenericallyInjective,
  TheoremViolated,
  NonFinite,
  CapReached,
};

const char* to_string(GermErrorKind k);

/// Failure tied to the geometry of a particular germ.
class GermError : public Error {
public:
  GermError(GermErrorKind kind, const std::string& message) : Error(message), kind_(kind) {}
  GermErrorKind kind() const { return kind_; }

private:
  GermErrorKind kind_;
};

/// f(x, y) = (x, p(x, y), q(x, y)) with p and q vanishing at the origin.
struct MapGerm {
  std::string name;
  Poly p;
  Poly q;
};

/// Validates and re-expresses p, q over (x, y). Throws GermError(InvalidGerm).
MapGerm make_germ(std::string name, const Poly& p, const Poly& q);

enum class Tri { Yes, No, Undetermined };
const char* to_string(Tri t);

struct FrontalVerdict {
  bool frontal = false;
  /// True when q_y | p_y was used, i.e. the roles of p and q were exchanged.
  bool swapped = false;
  /// The division that decided the verdict (p_y | q_y, or q_y | p_y).
  LocalDivisibility division;
};

/// Frontality of a corank-1 germ: p_y | q_y or q_y | p_y in the local ring.
/// Throws GermError(NotGenericallyImmersive) when p_y = q_y = 0.
FrontalVerdict check_frontal(const MapGerm& g, int jet_cap = kDefaultJetCap);

/// Double point data: lambda = Res_{y'}(p[x,y,y'], q[x,y,y']) and
/// tau = lambda / p_y^2, both normalised up to a unit.
struct DoublePointCurve {
  Poly lambda;
  Poly tau;
};

/// Throws GermError(NotGenericallyInjective) when lambda = 0 and
/// GermError(TheoremViolated) when p_y^2 does not divide lambda locally.
DoublePointCurve double_point_curve(const MapGerm& g, int jet_cap = kDefaultJetCap);

/// (alpha, alpha') = second divided differences of p and q, over (x, y, y').
std::pair<Poly, Poly> alpha_pair(const MapGerm& g);

/// Data of a frontal germ in prenormal orientation (p_y | q_y).
struct FrontalData {
  MapGerm germ;
  FrontalVerdict verdict;
  /// mu = q_y / p_y = mu_numerator / mu_denominator, mu_denominator(0) != 0.
  Poly mu_numerator;
  Poly mu_denominator;
  /// Conormal (mu p_x - q_x, -mu, 1) scaled by mu_denominator.
  std::array<Poly, 3> nu;
  Poly cuspidal;
  Poly lambda;
  Poly tau;
  Poly alpha;
  Poly alpha_prime;
};

/// Full frontal analysis; exchanges p and q when only q_y | p_y holds.
/// Throws GermError(NotFrontal) for non-frontal germs.
FrontalData analyze_frontal(const MapGerm& g, int jet_cap = kDefaultJetCap);

struct FinitenessReport {
  Tri vpmu_isolated = Tri::Undetermined;
  Tri critical_isolated = Tri::Undetermined;
  Tri c_reduced = Tri::Undetermined;
  Tri dplus_reduced = Tri::Undetermined;
  Tri f_finite = Tri::Undetermined;
  ColengthResult vpmu;
  ColengthResult critical;
};

/// The F-finiteness criterion: when V(p_y, mu_y) is isolated, f is F-finite
/// iff the critical set of p_y * tau is isolated. A colength that hits the
/// cap becomes No only when an exact common-factor test confirms it.
FinitenessReport finiteness_checks(const FrontalData& d, int jet_cap = kDefaultJetCap);

}  // namespace frontal
