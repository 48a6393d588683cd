#pragma once

#include <vector>

#include "frontal/frontal_core.hpp"
#include "frontal/local_algebra.hpp"

namespace frontal {

/// Target variables (X, Y, Z).
const std::vector<std::string>& target_vars();

/// d = min(ord p(0,y), ord q(0,y)), which equals dim O_2/(x, p, q).
/// Throws GermError(NonFinite) when p(0,y) and q(0,y) both vanish.
int multiplicity(const MapGerm& g);

/// Square presentation of f_* O_2 over O_3: lambda_pres = Q - Z*Id, where
/// column i of Q holds the coordinates of q*y^i in the basis 1, ..., y^(d-1)
/// with coefficients in (X, Y) = (x, p). Entries are exact in every term of
/// (X, Y)-degree <= jet_order and carry no higher terms.
struct PresentationMatrix {
  int d = 0;
  /// True when p and q were exchanged so that ord p(0,y) = d.
  bool swapped = false;
  int jet_order = 0;
  std::vector<std::vector<Poly>> Q;
  std::vector<std::vector<Poly>> lambda_pres;
};

PresentationMatrix presentation(const MapGerm& g, int jet_order);

/// Does q*y^i = sum_j Q_ji(x, p) y^j hold in every total degree <= jet_order?
bool presentation_is_faithful(const MapGerm& g, const PresentationMatrix& m);

/// Determinant, keeping terms of (X, Y)-degree <= jet_order.
Poly fitting_F0(const PresentationMatrix& m);

/// All k x k minors, keeping terms of total degree <= jet_order. The empty
/// minor (k = 0) is 1.
std::vector<Poly> minors(const PresentationMatrix& m, int k);

/// Does F0(x, p, q) vanish in every total degree <= jet_order?
bool image_equation_vanishes(const MapGerm& g, const PresentationMatrix& m, const Poly& F0);

struct FittingResult {
  PresentationMatrix presentation;
  Poly F0;
  bool F0_vanishes = false;
  std::vector<Poly> F2_generators;
  ColengthResult F3;
  /// Jet order at which F3 was confirmed (identical at jet_order and
  /// jet_order + 5); 0 when d <= 2.
  int confirmed_at = 0;
};

/// Colength of F_2(f), generated by the (d-2) x (d-2) minors. Raises the
/// jet order from 6 in steps of 5 until the colength is finite and
/// identical at two consecutive orders, up to `max_jet`.
FittingResult fitting_F3(const MapGerm& g, int max_jet = kDefaultJetCap);

}  // namespace frontal
