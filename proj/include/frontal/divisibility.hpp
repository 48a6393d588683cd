#pragma once

#include "frontal/poly.hpp"

namespace frontal {

inline constexpr int kDefaultJetCap = 40;

enum class LocalVerdict { LocallyDivides, NotDivisible, DividesUpToJetOrder };
enum class DecisionTier { Exact, Jet };

const char* to_string(LocalVerdict v);
const char* to_string(DecisionTier t);

/// Outcome of asking whether f divides g in the local ring at the origin.
///
/// On LocallyDivides from the exact tier, the quotient is the rational
/// function mu_numerator / mu_denominator with mu_denominator(0) != 0. The
/// jet tier stores the truncation of the quotient at `order` in
/// mu_numerator and sets mu_denominator = 1.
struct LocalDivisibility {
  LocalVerdict verdict = LocalVerdict::NotDivisible;
  DecisionTier tier = DecisionTier::Exact;
  int order = 0;
  Poly mu_numerator;
  Poly mu_denominator;
  /// Homogeneous part of g - mu*f that the lowest form of f fails to divide.
  Poly obstruction;
  int obstruction_order = -1;

  bool divides() const { return verdict != LocalVerdict::NotDivisible; }
};

/// Two-tier local divisibility test of f | g for polynomials.
///
/// Exact tier: with d = gcd(f, g), f divides g locally iff f/d is a unit at
/// the origin. When it is not, g = mu*f is solved degree by degree to find
/// the first obstructed order (tier Jet). If no obstruction appears below
/// `jet_cap` the verdict is still NotDivisible, decided by the exact tier,
/// with obstruction_order = -1.
LocalDivisibility local_divisibility(const Poly& f, const Poly& g, int jet_cap = kDefaultJetCap);

/// Only the degree-by-degree tier. Reaching `jet_cap` without an obstruction
/// yields DividesUpToJetOrder; this is what a caller holding only jets of f
/// and g can conclude.
LocalDivisibility local_divisibility_by_jets(const Poly& f, const Poly& g, int jet_cap);

}  // namespace frontal
