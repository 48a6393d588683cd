#pragma once

#include <optional>
#include <string>

#include "frontal/frontal_core.hpp"
#include "frontal/local_algebra.hpp"

namespace frontal {

/// Variables (x, u) of the fold datum, u standing for y^2.
const std::vector<std::string>& fold_vars();

/// Fold germ (x, y^2, y h(x, y^2)), or its frontalisation
/// (x, y^2, y^3 h(x, y^2)) when `frontalised` is set.
struct FoldGerm {
  Poly h;
  bool frontalised = false;
};

/// Exact recognition: p must equal y^2 and q must be odd in y. A germ
/// (x, y^2, y g(x, y^2)) with u | g is reported as the frontalisation of g/u.
std::optional<FoldGerm> detect_fold(const MapGerm& g);

/// The map germ a fold datum stands for.
MapGerm realise(const FoldGerm& f, const std::string& name = "");

/// (x, y^2, y h) -> (x, y^2, y^3 h). An already frontalised input is returned
/// unchanged and `already` is set.
MapGerm frontalise(const FoldGerm& f, bool* already = nullptr);

/// Codimension of the fold datum h; the same number is the A_e-codimension
/// of (x, y^2, y h) and the F_e-codimension of its frontalisation.
ColengthResult fold_codim(const FoldGerm& f, int cap = kDefaultJetCap);

struct Classification {
  bool classified = false;
  /// "S", "B", "C" or "F".
  std::string family;
  /// Index in the Mond table convention (S_k has h = u + x^(k+1)).
  int k = 0;
  /// "S_2" for the fold, "S2_check" for its frontalisation.
  std::string label;
  std::string convention;
};

/// Literal normal-form matching of the fold datum against the simple
/// families (unit scalars on each term allowed).
Classification classify_simple(const MapGerm& g);

}  // namespace frontal
