#pragma once

#include <optional>
#include <string>

#include "frontal/fitting.hpp"
#include "frontal/frontal_core.hpp"

namespace frontal {

/// Swallowtails, cuspidal double points, triple points and folded Whitney
/// umbrellas of a frontal stabilisation.
struct SKTW {
  long S = 0;
  long K = 0;
  long T = 0;
  long W = 0;
};

struct SkwCounts {
  /// colength(p_y, p_yy) in O_2.
  ColengthResult P3;
  /// colength(p_y, tau) in O_2.
  ColengthResult PT;
  /// colength(p_y, alpha, alpha') in O_3 over (x, y, y').
  ColengthResult PAA;
  /// colength of F_2(f) in O_3.
  ColengthResult F3;
  /// All four colengths finite; `sktw` is meaningful only then.
  bool complete = false;
  /// Names of the colengths that reached the cap, comma separated.
  std::string failure;
  SKTW sktw;
  bool nonnegative = false;
};

/// Solves P3 = S, PT = 2S + K + W, PAA' = 2S + K, F3 = T + S + K and checks
/// that the solution reproduces all four colengths.
SkwCounts skw_counts(const FrontalData& d, int cap = kDefaultJetCap);
SkwCounts skw_counts(const MapGerm& g, int cap = kDefaultJetCap);

/// Inverse of the solve: (P3, PT, PAA', F3).
std::array<long, 4> recombine(const SKTW& s);

/// Jacobian colength of a plane curve germ; nullopt when the cap is reached
/// (a non-reduced curve). Throws Error when g(0, 0) != 0 or g = 0.
std::optional<long> milnor_plane(const Poly& g, int cap = kDefaultJetCap);

struct MararMond {
  Scalar image_c;
  Scalar image_d;
};

/// mu(f(C)) = 2S + mu(C) and mu(f(D)) = (2K + 2T + mu(D) - W - S + 1) / 2.
MararMond marar_mond_eval(const SKTW& s, long mu_c, long mu_d);

struct FrontalMilnor {
  Scalar via_image;
  Scalar via_source;
};

/// mu_F = mu(f(D)) - S - W + T + 1 and (mu(D) + 3(1 - S - W)) / 2 + K + 2T,
/// the first evaluated with mu(f(D)) from marar_mond_eval.
FrontalMilnor frontal_milnor(const SKTW& s, long mu_d);

/// Which curve stands for D(f) in the Milnor number formulas.
enum class DReading { DPlus, Full };
const char* to_string(DReading r);

struct MuFReading {
  DReading reading = DReading::DPlus;
  /// False when the curve is empty at the origin; mu_F is then 0.
  bool applicable = false;
  bool computed = false;
  std::string note;
  Poly curve;
  long mu_d = 0;
  Scalar image_d;
  Scalar via_image;
  Scalar via_source;
  /// mu_F as reported: via_source when applicable, 0 when not.
  Scalar mu_f;
  bool integral = true;
};

struct QuasiHomogeneity {
  bool qh = false;
  /// (w_x, w_y) and the weighted degrees of x, p and q.
  long w_x = 0;
  long w_y = 0;
  std::array<long, 3> degrees{};
};

/// Exact search for positive weights making x, p and q weighted homogeneous;
/// the witness is the smallest integer one.
QuasiHomogeneity quasihomogeneous_test(const MapGerm& g);

struct ConjectureReport {
  std::string label;
  bool codim_computed = false;
  long codim = 0;
  bool qh = false;
  /// One verdict per reading, in the order D+, full.
  std::array<std::string, 2> verdicts;
};

struct InvariantReport {
  SkwCounts counts;
  /// mu of C = V(p_y); absent when C is empty or the cap was reached.
  std::optional<long> mu_c;
  bool c_empty = false;
  std::optional<Scalar> mu_image_c;
  std::array<MuFReading, 2> readings;
  std::optional<long> codim;
  QuasiHomogeneity qh;
  ConjectureReport conjecture;
};

/// mu_F compared with the fold codimension and the quasihomogeneity flag.
ConjectureReport conjecture_report(const InvariantReport& r);

InvariantReport compute_invariants(const FrontalData& d, int cap = kDefaultJetCap);

}  // namespace frontal
