#include "hofer/kirwan.hpp"

#include <algorithm>

namespace hofer {

namespace {

KindVerdict verdict_for(const OrbitFamily& E, NormKind kind) {
  AbelianFaces af = has_abelian_faces(E, kind);
  KindVerdict v;
  v.commuting = af.abelian;
  v.witness = af.witness;
  v.polytope_vertices = static_cast<int>(hofer_polytope(E, kind).vertices.size());
  return v;
}

}  // namespace

KirwanInput make_kirwan_input(int n, std::vector<RatVec> vertices, std::string label) {
  KirwanInput K;
  K.family = make_family(n, FamilyMode::KirwanHull, std::move(vertices));
  K.label = std::move(label);
  return K;
}

DichotomyReport commuting_hamiltonians(const KirwanInput& K) {
  DichotomyReport rep;
  rep.hofer = verdict_for(K.family, NormKind::Hofer);
  rep.second = verdict_for(K.family, NormKind::Second);
  rep.one_sided_plus = verdict_for(K.family, NormKind::OneSidedPlus);
  rep.regular_orbit_equivalent = regular_orbit_equivalence(K, &rep.equivalence_route);
  rep.provenance.push_back(K.label);
  return rep;
}

std::optional<RatVec> regular_orbit_equivalence(const KirwanInput& K, std::string* route) {
  const OrbitFamily& E = K.family;
  if (route) route->clear();
  const std::vector<RatVec> omegas = weyl::chamber_generators(E.n);

  for (const RatVec& xi : E.vertices) {
    RatVec y = vec_sub(xi, reversed(xi));
    if (!weyl::is_regular(y)) continue;
    // h_+ inside the normal cone of A at x_i: since h_+ is the nonnegative
    // span of the omegas, finitely many exact inequalities suffice.
    bool cone_ok = true;
    for (const RatVec& xj : E.vertices) {
      for (const RatVec& om : omegas) {
        if (dot(om, vec_sub(xi, xj)) < 0) { cone_ok = false; break; }
      }
      if (!cone_ok) break;
    }
    if (!cone_ok) continue;

    // the sufficient condition fired; the polytope route must agree
    std::optional<RatVec> direct = weyl_chamber_norm_test(E, NormKind::Hofer);
    if (!direct || *direct != y)
      throw std::logic_error("regular_orbit_equivalence: vertex condition disagrees with polytope");
    if (route) *route = "vertex-condition";
    return y;
  }

  // The vertex condition is sufficient but not necessary; fall back to the
  // direct test on the extreme points.
  std::optional<RatVec> direct = weyl_chamber_norm_test(E, NormKind::Hofer);
  if (direct && route) *route = "polytope";
  return direct;
}

std::pair<KirwanInput, DichotomyReport> product_compose(const std::vector<KirwanInput>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("product_compose: no inputs");
  const int n = inputs[0].family.n;
  for (const KirwanInput& K : inputs)
    if (K.family.n != n) throw std::invalid_argument("product_compose: dimension mismatch");

  // Route 1: Minkowski sum of the factors' Hofer polytopes.
  Polytope sum = hofer_polytope(inputs[0].family, NormKind::Hofer);
  for (std::size_t i = 1; i < inputs.size(); ++i)
    sum = minkowski_sum(sum, hofer_polytope(inputs[i].family, NormKind::Hofer));

  // Route 2: the polytope of the summed moment data (pairwise vertex sums of
  // the Kirwan polytopes). The summed Kirwan set differs from the true
  // product image only inside the chamber walls, which the derived norm
  // polytope cannot see.
  std::vector<RatVec> sum_vertices = inputs[0].family.vertices;
  std::string label = inputs[0].label;
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    std::vector<RatVec> next;
    for (const RatVec& a : sum_vertices)
      for (const RatVec& b : inputs[i].family.vertices) next.push_back(vec_add(a, b));
    std::sort(next.begin(), next.end(), lex_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sum_vertices = std::move(next);
    label += "+" + inputs[i].label;
  }
  KirwanInput composite = make_kirwan_input(n, sum_vertices, label);
  Polytope from_moment = hofer_polytope(composite.family, NormKind::Hofer);

  if (!same_vertex_set(sum, from_moment))
    throw std::logic_error("product_compose: Minkowski sum and moment-image routes disagree");

  // Single-orbit factors compose to the single orbit of the summed labels.
  bool all_single_orbit = true;
  RatVec y_total(n, Rat(0));
  for (const KirwanInput& K : inputs) {
    const Polytope P = hofer_polytope(K.family, NormKind::Hofer);
    std::vector<RatVec> reps;
    for (const RatVec& v : P.vertices) reps.push_back(weyl::dominant(v));
    std::sort(reps.begin(), reps.end(), lex_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (reps.size() != 1) { all_single_orbit = false; break; }
    y_total = vec_add(y_total, reps[0]);
  }
  if (all_single_orbit) {
    std::vector<RatVec> expect = weyl::orbit(y_total);
    if (sum.vertices != expect)
      throw std::logic_error("product_compose: single-orbit sum is not W.(sum of labels)");
  }

  // A factor with all-regular extreme points forces all-regular sums.
  bool some_factor_regular = false;
  for (const KirwanInput& K : inputs)
    if (has_abelian_faces(K.family, NormKind::Hofer).abelian) { some_factor_regular = true; break; }
  if (some_factor_regular) {
    for (const RatVec& v : sum.vertices) {
      if (!weyl::is_regular(v))
        throw std::logic_error("product_compose: regular factor did not propagate");
    }
  }

  DichotomyReport rep = commuting_hamiltonians(composite);
  rep.provenance.clear();
  for (const KirwanInput& K : inputs) rep.provenance.push_back(K.label);
  return {composite, rep};
}

}  // namespace hofer
