#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hofer/algebra.hpp"
#include "hofer/polytope.hpp"
#include "hofer/weyl.hpp"

namespace hofer {

enum class NormKind { Hofer, Second, OneSidedPlus, OneSidedMinus };

const char* norm_kind_name(NormKind k);
std::optional<NormKind> norm_kind_from_name(const std::string& s);

enum class FamilyMode { KirwanHull, DiscreteUnion };

// Ad-invariant set E described by the dominant representatives of its
// orbits: either the Kirwan polytope A = conv{x_i} (KirwanHull) or the
// discrete union of the orbits through the x_i (DiscreteUnion). The derived
// norms and polytopes only see conv(E), so the two modes share all machinery.
struct OrbitFamily {
  int n = 0;
  FamilyMode mode = FamilyMode::KirwanHull;
  std::vector<RatVec> vertices;  // dominant, sum-zero, deduplicated
};

// Validates dominance, sum-zero and fullness; KirwanHull mode prunes
// vertices interior to the hull of the others. Throws NotDominant / NotFull.
OrbitFamily make_family(int n, FamilyMode mode, std::vector<RatVec> vertices);

// --- norm evaluation ---------------------------------------------------------

// Closed forms (rearrangement / Lemma of same-chamber pairing), with
// lambda, xi both sorted decreasingly:
//   h+(xi) = max_i <lambda_i, xi>,  h-(xi) = max_i <lambda_i, -reverse(xi)>,
//   Hofer = h+ + h-,  Second = max(h+, h-),  OneSidedPlus = h+, Minus = h-.
Rat norm_exact(const OrbitFamily& E, const RatVec& cartan_coords, NormKind kind,
               const Rat& scale = Rat(1));
double norm_value(const OrbitFamily& E, const std::vector<double>& cartan_coords, NormKind kind,
                  double scale = 1.0);
double norm_value(const OrbitFamily& E, const SkewHermitian& x, NormKind kind, double scale = 1.0);

// --- polytopes ---------------------------------------------------------------

// Dominant representatives generating the kind's norm polytope:
// Hofer: x_i - w*.x_j over all pairs; Second: x_i and dominant(-x_i);
// OneSidedPlus: x_i; OneSidedMinus: dominant(-x_i).
std::vector<RatVec> dominant_generators(const OrbitFamily& E, NormKind kind);

// Hull of the Weyl orbits of the given dominant representatives; extremeness
// is decided per orbit by exact LP against all generated points.
Polytope hull_of_weyl_orbits(const std::vector<RatVec>& dominant_reps, int n);

// The kind's Hofer norm polytope P in the Cartan algebra (memoized).
// Throws DimensionTooLarge for n > 6.
Polytope hofer_polytope(const OrbitFamily& E, NormKind kind);

// B cap h = P^circ: the Cartan slice of the unit ball (memoized polar,
// carries its H-representation).
Polytope unit_ball_cartan(const OrbitFamily& E, NormKind kind);

void clear_norm_caches();

// --- certificates, faces, order ----------------------------------------------

// Norming functionals of a dominant x: phi_{y+ - y-} with y+ in the argmax
// face and y- in the argmin face of conv(E) restricted to the Cartan algebra.
// For one-sided kinds the unused side is the zero polytope; for the second
// kind the larger of h+/h- selects the side (both kept and the sample halved
// on a tie).
struct NormingCertificate {
  Polytope plus_face;
  Polytope minus_face;
  RatVec functional;
};

NormingCertificate norming_certificate(const OrbitFamily& E, const RatVec& x, NormKind kind);

// true iff z is majorized by w: descending partial sums of spec(z) bounded by
// those of spec(w), equal totals. Float spectra are rounded onto the common
// grid 1/grid_den so near-equal eigenvalues collapse consistently; both exact
// routes (partial sums and permutohedron membership LP) then run on the same
// rational data and must agree.
bool majorizes(const SkewHermitian& w, const SkewHermitian& z,
               unsigned long grid_den = 1000000UL);
bool majorizes_exact(const RatVec& w_spec, const RatVec& z_spec);

// Cartan part F_x(B cap h) cap h+ of the face of the unit ball at a dominant
// x, with the stabilizer blocks describing the Ad_{Z(x)} sweep that
// reconstructs the full face.
struct BallFace {
  Polytope cartan_part;
  std::vector<int> blocks;
};

BallFace face_of_ball(const OrbitFamily& E, const RatVec& x, NormKind kind);

// All extreme points of the kind's polytope regular? On failure returns a
// singular extreme point as witness.
struct AbelianFaces {
  bool abelian = false;
  std::optional<RatVec> witness;
};

AbelianFaces has_abelian_faces(const OrbitFamily& E, NormKind kind);

// If ext(P) is a single orbit W.y with y dominant, regular and symmetric,
// returns y (the norm is then the Hofer norm of the regular orbit of y/2).
std::optional<RatVec> weyl_chamber_norm_test(const OrbitFamily& E, NormKind kind);

// Largest r with r * (unit ball cap h) inside the spectral pi-ball: the
// injectivity radius of the exponential for this norm.
double injectivity_radius(const OrbitFamily& E, NormKind kind);

}  // namespace hofer
