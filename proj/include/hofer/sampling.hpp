#pragma once

#include <random>

#include "hofer/geodesy.hpp"
#include "hofer/norms.hpp"

namespace hofer::sampling {

using Rng = std::mt19937_64;

// Nonzero dominant sum-zero vector with small integer numerators over one
// common denominator.
RatVec random_dominant_ratvec(Rng& rng, int n, int max_num = 4, int max_den = 3);

// Sum-zero rational vector (unsorted), for spectra.
RatVec random_sum_zero_ratvec(Rng& rng, int n, int max_num = 6, int max_den = 4);

OrbitFamily random_family(Rng& rng, int n, int max_vertices = 2,
                          FamilyMode mode = FamilyMode::KirwanHull);

SkewHermitian random_skew(Rng& rng, int n, double frob_scale = 1.0);

// Random element with spectral norm drawn uniformly from (lo, hi).
SkewHermitian random_skew_with_inf_norm(Rng& rng, int n, double lo, double hi);

UnitaryElement random_unitary(Rng& rng, int n);

// Deterministic mixed battery of (family, kind) pairs for dimension n.
NormBattery default_battery(Rng& rng, int n, int count);

}  // namespace hofer::sampling
