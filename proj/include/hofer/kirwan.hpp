#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hofer/norms.hpp"

namespace hofer {

// Kirwan-polytope data: the dominant vertices of mu(M) cap h_+.
struct KirwanInput {
  OrbitFamily family;
  std::string label;
};

KirwanInput make_kirwan_input(int n, std::vector<RatVec> vertices, std::string label);

struct KindVerdict {
  bool commuting = false;                // all extreme points of the kind's polytope regular
  std::optional<RatVec> witness;         // a singular extreme point otherwise
  int polytope_vertices = 0;
};

struct DichotomyReport {
  KindVerdict hofer, second, one_sided_plus;
  std::optional<RatVec> regular_orbit_equivalent;  // y with ext(P) = W.y, y regular symmetric
  std::string equivalence_route;                   // "vertex-condition" | "polytope" | ""
  std::vector<std::string> provenance;             // input labels (products)
};

// Commuting-Hamiltonian dichotomy for the Hofer, second and one-sided norms:
// short curves have commuting Hamiltonians iff every extreme point of the
// corresponding norm polytope is regular.
DichotomyReport commuting_hamiltonians(const KirwanInput& K);

// Searches for y regular symmetric with ext(P) = W.y, so the metric is the
// one of the regular coadjoint orbit through y/2. First tries the Kirwan
// vertex condition (x_i - w*.x_i regular and h_+ inside the normal cone at
// x_i, tested on the chamber generators), then falls back to the direct
// polytope test; the route taken is reported. When the vertex condition
// fires, agreement with the polytope route is asserted.
std::optional<RatVec> regular_orbit_equivalence(const KirwanInput& K,
                                                std::string* route = nullptr);

// Product of Hamiltonian actions: the composite Hofer polytope is the
// Minkowski sum of the factors' polytopes. Asserts the equality of the two
// construction routes (vertex sums of the Kirwan data vs polytope Minkowski
// sum), single-orbit composition ext(P1+...+Pk) = W.(y1+...+yk), and the
// regular-factor propagation, then analyzes the composite.
std::pair<KirwanInput, DichotomyReport> product_compose(const std::vector<KirwanInput>& inputs);

}  // namespace hofer
