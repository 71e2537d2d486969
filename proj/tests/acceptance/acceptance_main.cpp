// Acceptance suite: runs every criterion at its stated sample counts and
// tolerances and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hofer/geodesy.hpp"
#include "hofer/io.hpp"
#include "hofer/kirwan.hpp"
#include "hofer/sampling.hpp"

using namespace hofer;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Harness {
  int failures = 0;

  void run(int number, const std::string& label, double budget_seconds,
           const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs < budget_seconds;
    const bool ok = error.empty() && in_budget;
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs, budget_seconds, error.empty() ? "" : " - ",
                error.c_str());
    std::fflush(stdout);
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

SkewHermitian idiag(const std::vector<double>& vals) {
  const int n = static_cast<int>(vals.size());
  CMat m = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cplx(0.0, vals[i]);
  return SkewHermitian(m);
}

const NormKind kAllKinds[] = {NormKind::Hofer, NormKind::Second, NormKind::OneSidedPlus,
                              NormKind::OneSidedMinus};

// --- criteria ------------------------------------------------------------------

void criterion1_su4() {
  OrbitFamily E = make_family(4, FamilyMode::KirwanHull, {rv({3, -1, -1, -1})});
  Polytope P = hofer_polytope(E, NormKind::Hofer);
  std::vector<RatVec> expect = weyl::orbit(rv({4, 0, 0, -4}));
  require(expect.size() == 12, "orbit of (4,0,0,-4) must have 12 points");
  require(P.vertices == expect, "extreme points must be the permutations of (4,0,0,-4)");
  AbelianFaces af = has_abelian_faces(E, NormKind::Hofer);
  require(!af.abelian, "regularity verdict must be false");
  require(af.witness.has_value() && !weyl::is_regular(*af.witness), "witness must be singular");
}

void criterion2_su3() {
  OrbitFamily E = make_family(3, FamilyMode::KirwanHull, {rv({2, -1, -1})});
  Polytope P = hofer_polytope(E, NormKind::Hofer);
  std::vector<RatVec> expect = weyl::orbit(rv({3, 0, -3}));
  require(expect.size() == 6, "orbit of (3,0,-3) must have 6 points");
  require(P.vertices == expect, "extreme points must be the permutations of (3,0,-3)");
  require(has_abelian_faces(E, NormKind::Hofer).abelian, "regularity verdict must be true");
  KirwanInput K{E, "su3"};
  auto y = regular_orbit_equivalence(K);
  require(y.has_value() && *y == rv({3, 0, -3}),
          "regular-orbit equivalence must return y = (3,0,-3)");
}

void criterion3_gauge_agreement() {
  sampling::Rng rng(1003);
  int pairs = 0;
  while (pairs < 1000) {
    const int n = 3 + pairs % 3;  // n in {3,4,5}
    OrbitFamily E = sampling::random_family(rng, n, n == 5 ? 1 : 2);
    for (int s = 0; s < 10 && pairs < 1000; ++s, ++pairs) {
      RatVec xi = sampling::random_sum_zero_ratvec(rng, n);
      for (NormKind kind : kAllKinds) {
        Polytope B = unit_ball_cartan(E, kind);
        Rat closed = norm_exact(E, xi, kind);
        Rat via_ball = gauge_lp_exact(B, xi);  // LP over the DD-computed ball
        require(closed == via_ball, "closed form and polytope gauge must agree exactly");
      }
    }
  }
}

void criterion4_rearrangement() {
  sampling::Rng rng(1004);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 5;  // up to n = 6
    RatVec x = sampling::random_sum_zero_ratvec(rng, n);
    RatVec y = sampling::random_sum_zero_ratvec(rng, n);
    RatVec xd = weyl::dominant(x), yd = weyl::dominant(y);
    Rat mx, mn;
    bool first = true;
    for (const RatVec& w : weyl::orbit(y)) {
      Rat v = dot(x, w);
      if (first || v > mx) mx = v;
      if (first || v < mn) mn = v;
      first = false;
    }
    require(mx == dot(xd, yd), "max over permutations must equal the sorted pairing");
    require(mn == dot(xd, reversed(yd)), "min over permutations must equal the reversed pairing");
  }
}

void criterion5_majorization() {
  sampling::Rng rng(1005);
  std::uniform_int_distribution<int> pick(0, 99);
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + t % 3;  // n <= 5
    RatVec w = sampling::random_sum_zero_ratvec(rng, n);
    RatVec z;
    if (t % 2 == 0) {
      std::vector<RatVec> orbit = weyl::orbit(w);
      RatVec acc(n, Rat(0));
      Rat total = 0;
      for (int j = 0; j < 3; ++j) {
        Rat lam = make_rat(1 + pick(rng) % 7, 8);
        acc = vec_add(acc, vec_scale(orbit[pick(rng) % orbit.size()], lam));
        total += lam;
      }
      z = vec_scale(acc, 1 / total);
    } else {
      z = sampling::random_sum_zero_ratvec(rng, n);
    }
    // majorizes_exact computes both the partial-sum test and the
    // permutohedron membership LP and throws on any disagreement
    bool m = majorizes_exact(w, z);
    if (t % 2 == 0) require(m, "a convex combination of orbit points must be majorized");
  }
}

void criterion6_dualities() {
  sampling::Rng rng(1006);
  int gauge_checks = 0;
  for (int p = 0; p < 100; ++p) {
    const int n = 3 + p % 2;
    std::vector<RatVec> pts;
    const int orbits = 1 + p % 2;
    for (int i = 0; i < orbits; ++i)
      for (const RatVec& w : weyl::orbit(sampling::random_dominant_ratvec(rng, n)))
        pts.push_back(w);
    Polytope P = hull(pts);
    Polytope Q = polar(P);
    // bipolar, exactly
    require(same_vertex_set(polar(Q), P), "bipolar identity must hold exactly");
    // support/gauge duality on 10 directions per polytope (1,000 total)
    for (int s = 0; s < 10; ++s, ++gauge_checks) {
      RatVec x = sampling::random_sum_zero_ratvec(rng, n);
      require(gauge_lp_exact(P, x) == support(Q, x), "gauge must equal the polar support");
    }
    // projection/section duality on a coordinate-equality subspace
    std::uniform_int_distribution<int> idx(0, n - 1);
    int i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    // basis of {x_i = x_j} cap sum-zero
    std::vector<RatVec> basis;
    RatVec shared(n, Rat(0));
    shared[i] = shared[j] = make_rat(1, 2);
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      RatVec b = shared;
      b[k] = -1;
      basis.push_back(std::move(b));
    }
    {
      RatVec b(n, Rat(0));
      b[i] = 1;
      b[j] = 1;
      Rat rest = make_rat(-2, n - 2);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) b[k] = rest;
      basis.push_back(std::move(b));
    }
    std::vector<RatVec> indep;
    for (const RatVec& b : basis) {
      indep.push_back(b);
      if (rank_of(indep) < static_cast<int>(indep.size())) indep.pop_back();
    }
    Polytope cut = section(P, indep);
    Polytope lhs = polar_within(cut, indep);
    Polytope rhs = project(Q, indep);
    require(same_vertex_set(lhs, rhs), "(B cap W)^polar must equal p_W(B^polar) exactly");
  }
  require(gauge_checks == 1000, "need 1000 gauge checks");
}

void criterion7_expono() {
  sampling::Rng rng(1007);
  NormBattery batteries[3] = {sampling::default_battery(rng, 2, 10),
                              sampling::default_battery(rng, 3, 10),
                              sampling::default_battery(rng, 4, 10)};
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 3;
    const bool small_case = t % 10 == 9;  // exercise the identity regime too
    SkewHermitian w = small_case
                          ? sampling::random_skew_with_inf_norm(rng, n, 0.2, kPi - 0.06)
                          : sampling::random_skew_with_inf_norm(rng, n, kPi + 0.01, 2 * kPi - 0.01);
    ExpTheoremReport r = check_exponential_theorem(w, batteries[n - 2], 1e-9);
    require(r.commutes_ok, "z must commute with w");
    require(r.majorizes_ok, "w must majorize z");
    for (const NormComparison& c : r.norms) require(c.ok, "norm comparison failed: " + c.name);
    if (spectral_norm_inf(w) < kPi - 0.05)
      require(r.identity_applicable && r.identity_ok, "z = w inside the injectivity domain");
    require(r.pass, "exponential theorem report must pass");
  }
}

void criterion8_product_exp() {
  sampling::Rng rng(1008);
  NormBattery batteries[3] = {sampling::default_battery(rng, 2, 10),
                              sampling::default_battery(rng, 3, 10),
                              sampling::default_battery(rng, 4, 10)};
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 3;
    SkewHermitian x = sampling::random_skew(rng, n, 0.8);
    SkewHermitian y = sampling::random_skew(rng, n, 0.7);
    if (t % 5 == 4) {
      // constructed commuting case: equality and z = x + y
      y = scale_by(x, 0.6);
    }
    ProductExpReport r = check_product_exponentials(x, y, batteries[n - 2], 1e-9);
    require(r.majorizes_ok, "x + y must majorize z");
    for (const NormComparison& c : r.norms) require(c.ok, "norm comparison failed: " + c.name);
    if (t % 5 == 4) {
      require(r.commuting_case, "constructed case must be detected as commuting");
      require(r.commuting_case_ok, "commuting case must give z = x + y");
    }
    require(r.pass, "product-of-exponentials report must pass");
  }
}

void criterion9_certifiers() {
  sampling::Rng rng(1009);
  // (a) one-parameter paths are always certified
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 3;
    OrbitFamily E = sampling::random_family(rng, n, 1);
    SkewHermitian z = sampling::random_skew_with_inf_norm(rng, n, 0.2, kPi - 0.2);
    GroupPath p;
    for (int k = 0; k <= 6; ++k) {
      p.times.push_back(k / 6.0);
      p.points.push_back(group_exp(scale_by(z, k / 6.0)));
    }
    GeodesicCertificate c = certify_commuting(log_derivatives(p), E, NormKind::Hofer);
    require(c.verdict == Verdict::Certified, "one-parameter path must be certified");
  }

  // (b) both certifiers agree on 500 random commuting families under
  // regular-orbit norms; non-crossing constructions are certified
  std::uniform_int_distribution<int> num(-8, 8);
  int certified = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + t % 2;
    RatVec lambda = sampling::random_dominant_ratvec(rng, n);
    while (!weyl::is_regular(lambda)) lambda = sampling::random_dominant_ratvec(rng, n);
    OrbitFamily E = make_family(n, FamilyMode::KirwanHull, {lambda});

    UnitaryElement u = sampling::random_unitary(rng, n);
    const int K = 2 + t % 3;
    const bool force_noncrossing = t % 2 == 0;
    DerivativePath d;
    d.times.resize(K + 1);
    for (int k = 0; k <= K; ++k) d.times[k] = k;
    for (int k = 0; k < K; ++k) {
      std::vector<double> row(n);
      double s = 0;
      for (int i = 0; i < n; ++i) {
        row[i] = num(rng) / 8.0;
        s += row[i];
      }
      for (int i = 0; i < n; ++i) row[i] -= s / n;
      if (force_noncrossing) std::sort(row.begin(), row.end(), std::greater<double>());
      d.derivatives.push_back(adjoint(u, idiag(row)));
    }
    GeodesicCertificate c1 = certify_regular_orbit(d, E);       // asserts agreement
    GeodesicCertificate c2 = certify_commuting(d, E, NormKind::Hofer);
    require(c1.verdict == c2.verdict, "certifiers must agree");
    if (force_noncrossing)
      require(c1.verdict == Verdict::Certified, "non-crossing family must be certified");
    certified += c1.verdict == Verdict::Certified;
  }
  require(certified >= 250, "the non-crossing half must be certified");

  // (c) constructed eigenvalue-crossing family is refuted
  OrbitFamily E3 = make_family(3, FamilyMode::KirwanHull, {rv({1, 0, -1})});
  DerivativePath crossed;
  crossed.times = {0, 1, 2};
  crossed.derivatives = {idiag({2, 1, -3}), idiag({1, 2, -3})};
  require(certify_regular_orbit(crossed, E3).verdict == Verdict::Refuted,
          "crossing family must be refuted");

  // (d) segment optimality against sampled competitor polygons
  UnitaryElement one = UnitaryElement::identity(3);
  for (int t = 0; t < 100; ++t) {
    SkewHermitian z = sampling::random_skew_with_inf_norm(rng, 3, 0.3, kPi - 0.1);
    UnitaryElement target = group_exp(z);
    const double dz = norm_value(E3, z, NormKind::Hofer);
    for (int c = 0; c < 10; ++c) {
      std::vector<UnitaryElement> chain = {one, sampling::random_unitary(rng, 3),
                                           sampling::random_unitary(rng, 3), target};
      require(chain_length(chain, E3, NormKind::Hofer) >= dz - 1e-9,
              "a competitor polygon undercut the segment");
    }
  }
}

void criterion10_products() {
  sampling::Rng rng(1010);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 2;
    std::vector<KirwanInput> factors;
    const int k = 2 + t % 2;
    bool any_commuting = false;
    bool all_single = true;
    RatVec y_sum(n, Rat(0));
    for (int i = 0; i < k; ++i) {
      OrbitFamily E = sampling::random_family(rng, n, 1 + t % 2);
      factors.push_back(KirwanInput{E, "f" + std::to_string(i)});
      any_commuting = any_commuting || has_abelian_faces(E, NormKind::Hofer).abelian;
      Polytope P = hofer_polytope(E, NormKind::Hofer);
      std::vector<RatVec> reps;
      for (const RatVec& v : P.vertices) reps.push_back(weyl::dominant(v));
      std::sort(reps.begin(), reps.end(), lex_less);
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      if (reps.size() == 1) y_sum = vec_add(y_sum, reps[0]);
      else all_single = false;
    }
    // product_compose itself asserts: route equality (Minkowski sum vs summed
    // moment data), Prop 6.19 single-orbit sums, Prop 6.21 regular propagation
    auto [comp, rep] = product_compose(factors);
    Polytope Pc = hofer_polytope(comp.family, NormKind::Hofer);
    if (all_single)
      require(Pc.vertices == weyl::orbit(y_sum), "single-orbit sum must be W.(sum of labels)");
    if (any_commuting)
      require(rep.hofer.commuting, "a commuting factor must force a commuting product");
  }
}

}  // namespace

int main() {
  Harness h;
  h.run(1, "SU(4) singular-orbit example: 12 permutations of (4,0,0,-4), singular", 5,
        criterion1_su4);
  h.run(2, "SU(3) example: 6 permutations of (3,0,-3), regular-orbit equivalence", 2,
        criterion2_su3);
  h.run(3, "closed form vs polytope gauge, 1000 pairs, n in {3,4,5}, all kinds", 60,
        criterion3_gauge_agreement);
  h.run(4, "rearrangement vs brute force over all permutations, 1000 cases, n <= 6", 60,
        criterion4_rearrangement);
  h.run(5, "majorization: partial sums vs permutohedron LP, 500 pairs, n <= 5", 60,
        criterion5_majorization);
  h.run(6, "bipolar, support/gauge and projection/section duality, 100 polytopes", 60,
        criterion6_dualities);
  h.run(7, "exponential theorem battery, 500 samples, wrapped spectra", 120, criterion7_expono);
  h.run(8, "product of exponentials battery, 1000 samples", 120, criterion8_product_exp);
  h.run(9, "geodesic certifiers: one-parameter, dual-route, crossing, competitors", 180,
        criterion9_certifiers);
  h.run(10, "product composition: orbit sums, regular propagation, 50 combos", 60,
        criterion10_products);

  if (h.failures == 0) {
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) failed\n", h.failures);
  return 1;
}
