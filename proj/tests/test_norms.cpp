#include <doctest.h>

#include "hofer/norms.hpp"
#include "hofer/sampling.hpp"
#include "test_util.hpp"

using namespace hofer;
using testutil::bf_norm;
using testutil::orbit_family;
using testutil::rv;
using testutil::rvq;

namespace {

const NormKind kAllKinds[] = {NormKind::Hofer, NormKind::Second, NormKind::OneSidedPlus,
                              NormKind::OneSidedMinus};

SkewHermitian idiag(std::initializer_list<double> vals) {
  const int n = static_cast<int>(vals.size());
  CMat m = CMat::Zero(n, n);
  int i = 0;
  for (double v : vals) m(i, i) = Cplx(0.0, v), ++i;
  return SkewHermitian(m);
}

// ad-spectrum of a Cartan vector: all pairwise differences plus the Cartan
// zeros; used to cross-check the matrix-level majorization.
RatVec ad_spectrum(const RatVec& xi) {
  const int n = static_cast<int>(xi.size());
  RatVec out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(xi[i] - xi[j]);
  for (int k = 0; k + 1 < n; ++k) out.push_back(Rat(0));
  return out;
}

bool partial_sum_order(const RatVec& big, const RatVec& small) {
  RatVec b = sorted_desc(big), s = sorted_desc(small);
  Rat sb = 0, ss = 0;
  for (std::size_t m = 0; m + 1 < b.size(); ++m) {
    sb += b[m];
    ss += s[m];
    if (ss > sb) return false;
  }
  return vec_sum(b) == vec_sum(s);
}

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("family construction validates and prunes") {
    CHECK_THROWS_AS(make_family(3, FamilyMode::KirwanHull, {rv({-1, 0, 1})}), NotDominant);
    CHECK_THROWS_AS(make_family(3, FamilyMode::KirwanHull, {rv({0, 0, 0})}), NotFull);
    // interior Kirwan samples are pruned: (2,0,-2) lies between the others
    OrbitFamily E = make_family(3, FamilyMode::KirwanHull,
                                {rv({2, 0, -2}), rv({1, 0, -1}), rv({4, 0, -4})});
    REQUIRE(E.vertices.size() == 2);
    CHECK(E.vertices.front() == rv({1, 0, -1}));
    CHECK(E.vertices.back() == rv({4, 0, -4}));
    // discrete unions keep every orbit
    OrbitFamily D = make_family(3, FamilyMode::DiscreteUnion,
                                {rv({2, 0, -2}), rv({1, 0, -1}), rv({4, 0, -4})});
    CHECK(D.vertices.size() == 3);
  }

  TEST_CASE("norm values against the brute-force oracle") {
    OrbitFamily E = orbit_family({{1, 0, -1}});
    RatVec xi = rv({2, 1, -3});
    CHECK(bf_norm(E, xi, NormKind::Hofer) == 10);  // oracle over all 6 permutations
    CHECK(bf_norm(E, xi, NormKind::OneSidedPlus) == 5);
    CHECK(norm_exact(E, xi, NormKind::Hofer) == 10);
    CHECK(norm_exact(E, xi, NormKind::OneSidedPlus) == 5);
    CHECK(norm_exact(E, xi, NormKind::OneSidedMinus) == 5);
    CHECK(norm_exact(E, xi, NormKind::Second) == 5);

    CHECK(norm_value(E, idiag({2, 1, -3}), NormKind::Hofer) == doctest::Approx(10.0));
    CHECK(norm_value(E, idiag({2, 1, -3}), NormKind::Hofer, 6.0) == doctest::Approx(60.0));

    for (NormKind k : kAllKinds) CHECK(norm_exact(E, rv({0, 0, 0}), k) == 0);

    // SU(2): orbit of (1,-1), x = i diag(th,-th): Hofer norm 4*th
    OrbitFamily E2 = orbit_family({{1, -1}});
    CHECK(norm_exact(E2, rv({3, -3}), NormKind::Hofer) == 12);
    CHECK(norm_value(E2, idiag({0.25, -0.25}), NormKind::Hofer) == doctest::Approx(1.0));

    sampling::Rng rng(3);
    for (int t = 0; t < 60; ++t) {
      const int n = 3 + t % 3;
      OrbitFamily F = sampling::random_family(rng, n, 2);
      RatVec x = sampling::random_sum_zero_ratvec(rng, n);
      for (NormKind k : kAllKinds) CHECK(norm_exact(F, x, k) == bf_norm(F, x, k));
    }
  }

  TEST_CASE("norm axioms: triangle, homogeneity, one-sided asymmetry") {
    sampling::Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E = sampling::random_family(rng, n, 2);
      RatVec x = sampling::random_sum_zero_ratvec(rng, n);
      RatVec y = sampling::random_sum_zero_ratvec(rng, n);
      for (NormKind k : kAllKinds) {
        CHECK(norm_exact(E, weyl::dominant(vec_add(x, y)), k) <=
              norm_exact(E, x, k) + norm_exact(E, y, k));
        CHECK(norm_exact(E, vec_scale(x, Rat(3)), k) == 3 * norm_exact(E, x, k));
        CHECK(norm_exact(E, x, k) >= 0);
      }
      // full homogeneity for the symmetric kinds
      CHECK(norm_exact(E, vec_neg(x), NormKind::Hofer) == norm_exact(E, x, NormKind::Hofer));
      CHECK(norm_exact(E, vec_neg(x), NormKind::Second) == norm_exact(E, x, NormKind::Second));
      // decompositions
      CHECK(norm_exact(E, x, NormKind::Hofer) ==
            norm_exact(E, x, NormKind::OneSidedPlus) + norm_exact(E, x, NormKind::OneSidedMinus));
      CHECK(norm_exact(E, x, NormKind::Second) ==
            std::max(norm_exact(E, x, NormKind::OneSidedPlus),
                     norm_exact(E, x, NormKind::OneSidedMinus)));
    }
    // a non-symmetric family produces an asymmetric one-sided norm
    OrbitFamily A = orbit_family({{2, -1, -1}});
    CHECK(norm_exact(A, rv({2, -1, -1}), NormKind::OneSidedPlus) == 6);
    CHECK(norm_exact(A, vec_neg(rv({2, -1, -1})), NormKind::OneSidedPlus) == 3);
  }

  TEST_CASE("one-sided minus is one-sided plus of the negated family") {
    sampling::Rng rng(41);
    for (int t = 0; t < 15; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E = sampling::random_family(rng, n, 2);
      std::vector<RatVec> neg;
      for (const RatVec& v : E.vertices) neg.push_back(weyl::dominant(vec_neg(v)));
      OrbitFamily En = make_family(n, E.mode, neg);
      RatVec x = sampling::random_sum_zero_ratvec(rng, n);
      CHECK(norm_exact(E, x, NormKind::OneSidedMinus) ==
            norm_exact(En, x, NormKind::OneSidedPlus));
    }
  }

  TEST_CASE("Ad-invariance of the matrix norm") {
    sampling::Rng rng(7);
    OrbitFamily E = orbit_family({{1, 0, -1}});
    SkewHermitian x = idiag({1.3, -0.4, -0.9});
    const double ref = norm_value(E, x, NormKind::Hofer);
    for (int t = 0; t < 200; ++t) {
      UnitaryElement u = sampling::random_unitary(rng, 3);
      CHECK(norm_value(E, adjoint(u, x), NormKind::Hofer) == doctest::Approx(ref).epsilon(1e-9));
    }
  }

  TEST_CASE("hofer polytope: SU(4) singular example") {
    OrbitFamily E = orbit_family({{3, -1, -1, -1}});
    Polytope P = hofer_polytope(E, NormKind::Hofer);
    std::vector<RatVec> expect = weyl::orbit(rv({4, 0, 0, -4}));
    REQUIRE(expect.size() == 12);
    CHECK(P.vertices == expect);
    AbelianFaces af = has_abelian_faces(E, NormKind::Hofer);
    CHECK_FALSE(af.abelian);
    REQUIRE(af.witness.has_value());
    CHECK(weyl::dominant(*af.witness) == rv({4, 0, 0, -4}));
    CHECK_FALSE(weyl_chamber_norm_test(E, NormKind::Hofer).has_value());
  }

  TEST_CASE("hofer polytope: SU(3) example equals a regular orbit polytope") {
    OrbitFamily E = orbit_family({{2, -1, -1}});
    Polytope P = hofer_polytope(E, NormKind::Hofer);
    std::vector<RatVec> expect = weyl::orbit(rv({3, 0, -3}));
    REQUIRE(expect.size() == 6);
    CHECK(P.vertices == expect);
    CHECK(has_abelian_faces(E, NormKind::Hofer).abelian);
    auto y = weyl_chamber_norm_test(E, NormKind::Hofer);
    REQUIRE(y.has_value());
    CHECK(*y == rv({3, 0, -3}));
  }

  TEST_CASE("regular symmetric orbits double under the chamber test") {
    OrbitFamily E = orbit_family({{2, 0, -2}});
    auto y = weyl_chamber_norm_test(E, NormKind::Hofer);
    REQUIRE(y.has_value());
    CHECK(*y == rv({4, 0, -4}));  // lambda - w*.lambda = 2 lambda
    // any regular orbit has a regular Hofer polytope (Corollary-type check)
    OrbitFamily R = orbit_family({{3, 1, -4}});
    CHECK(has_abelian_faces(R, NormKind::Hofer).abelian);
  }

  TEST_CASE("orbit-symmetric hull shortcut agrees with the generic hull") {
    sampling::Rng rng(47);
    for (int t = 0; t < 8; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E = sampling::random_family(rng, n, 2);
      for (NormKind k : kAllKinds) {
        Polytope fast = hofer_polytope(E, k);
        std::vector<RatVec> all;
        for (const RatVec& d : dominant_generators(E, k))
          for (const RatVec& w : weyl::orbit(d)) all.push_back(w);
        Polytope generic = hull(all);  // Clarkson pruning, no symmetry used
        CHECK(same_vertex_set(fast, generic));
      }
    }
  }

  TEST_CASE("norm polytopes are Weyl invariant; the symmetric kinds are centrally so") {
    sampling::Rng rng(43);
    for (int t = 0; t < 8; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E = sampling::random_family(rng, n, 2);
      for (NormKind k : kAllKinds) {
        Polytope P = hofer_polytope(E, k);
        for (const RatVec& v : P.vertices) {
          for (const RatVec& w : weyl::orbit(weyl::dominant(v)))
            CHECK(std::binary_search(P.vertices.begin(), P.vertices.end(), w, lex_less));
          if (k == NormKind::Hofer || k == NormKind::Second)
            CHECK(std::binary_search(P.vertices.begin(), P.vertices.end(), vec_neg(v), lex_less));
        }
      }
    }
  }

  TEST_CASE("one-sided polytope is the permutohedron of the orbit") {
    OrbitFamily E = orbit_family({{2, 1, -3}});
    CHECK(hofer_polytope(E, NormKind::OneSidedPlus).vertices == weyl::orbit(rv({2, 1, -3})));
    OrbitFamily E2 = orbit_family({{3, -1, -1, -1}});
    CHECK(hofer_polytope(E2, NormKind::OneSidedPlus).vertices.size() == 4);  // 4!/3!
    CHECK_THROWS_AS(hofer_polytope(orbit_family({{1, 0, 0, 0, 0, 0, -1}}), NormKind::Hofer),
                    DimensionTooLarge);
  }

  TEST_CASE("unit ball: gauge reproduces the closed form exactly") {
    sampling::Rng rng(11);
    for (int t = 0; t < 10; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E = sampling::random_family(rng, n, 2);
      for (NormKind k : kAllKinds) {
        Polytope P = hofer_polytope(E, k);
        Polytope B = unit_ball_cartan(E, k);
        Polytope BB = polar(B);  // bipolar route back to P
        CHECK(same_vertex_set(BB, P));
        for (int s = 0; s < 5; ++s) {
          RatVec x = sampling::random_sum_zero_ratvec(rng, n);
          Rat g = support(BB, x);
          CHECK(g == norm_exact(E, x, k));
          CHECK(g == gauge_lp_exact(B, x));
          REQUIRE(B.hrep.has_value());
          CHECK(g == gauge_from_hrep(*B.hrep, x));
        }
      }
    }
  }

  TEST_CASE("second-kind ball contains the Hofer-kind ball") {
    sampling::Rng rng(13);
    for (int t = 0; t < 6; ++t) {
      OrbitFamily E = sampling::random_family(rng, 3 + t % 2, 2);
      Polytope Bh = unit_ball_cartan(E, NormKind::Hofer);
      Polytope Bs = unit_ball_cartan(E, NormKind::Second);
      for (const RatVec& v : Bh.vertices) CHECK(contains(Bs, v));
    }
  }

  TEST_CASE("norming certificates") {
    // regular x, regular single orbit: unique norming direction
    OrbitFamily E = orbit_family({{2, 0, -2}});
    RatVec x = rv({3, 1, -4});
    NormingCertificate c = norming_certificate(E, x, NormKind::Hofer);
    REQUIRE(c.plus_face.vertices.size() == 1);
    REQUIRE(c.minus_face.vertices.size() == 1);
    CHECK(c.plus_face.vertices[0] == rv({2, 0, -2}));
    CHECK(c.minus_face.vertices[0] == rv({-2, 0, 2}));
    CHECK(c.functional == rv({4, 0, -4}));
    CHECK(dot(c.functional, x) == norm_exact(E, x, NormKind::Hofer));
    CHECK(gauge_lp_exact(hofer_polytope(E, NormKind::Hofer), c.functional) == 1);

    // x = lambda itself: the plus face contains lambda
    NormingCertificate cs = norming_certificate(E, rv({2, 0, -2}), NormKind::Hofer);
    CHECK(contains(cs.plus_face, rv({2, 0, -2})));

    // singular x ties: faces with more than one vertex
    NormingCertificate ct = norming_certificate(E, rv({1, 1, -2}), NormKind::Hofer);
    CHECK(ct.plus_face.vertices.size() == 2);
    CHECK(dot(ct.functional, rv({1, 1, -2})) == norm_exact(E, rv({1, 1, -2}), NormKind::Hofer));

    // every kind's sample functional norms x with dual gauge one
    sampling::Rng rng(17);
    for (int t = 0; t < 15; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily F = sampling::random_family(rng, n, 2);
      RatVec xd = sampling::random_dominant_ratvec(rng, n);
      for (NormKind k : kAllKinds) {
        NormingCertificate cc = norming_certificate(F, xd, k);
        CHECK(dot(cc.functional, xd) == norm_exact(F, xd, k));
        CHECK(gauge_lp_exact(hofer_polytope(F, k), cc.functional) == 1);
      }
    }
    CHECK_THROWS_AS(norming_certificate(E, rv({0, 0, 0}), NormKind::Hofer), ZeroVector);
    CHECK_THROWS_AS(norming_certificate(E, rv({-1, 0, 1}), NormKind::Hofer), NotDominant);
  }

  TEST_CASE("majorization: examples, antisymmetry, both routes") {
    CHECK(majorizes_exact(rv({2, 0, -2}), rv({1, 0, -1})));
    CHECK_FALSE(majorizes_exact(rv({1, 0, -1}), rv({2, 0, -2})));
    // 0 is majorized by everything
    sampling::Rng rng(19);
    for (int t = 0; t < 20; ++t) {
      RatVec w = sampling::random_sum_zero_ratvec(rng, 4);
      CHECK(majorizes_exact(w, rv({0, 0, 0, 0})));
      RatVec z = sampling::random_sum_zero_ratvec(rng, 4);
      // antisymmetry: mutual majorization forces equal multisets
      if (majorizes_exact(w, z) && majorizes_exact(z, w))
        CHECK(sorted_desc(w) == sorted_desc(z));
    }
    // matrix-level entry point
    CHECK(majorizes(idiag({2, 0, -2}), idiag({1, 0, -1})));
    CHECK_FALSE(majorizes(idiag({1, 0, -1}), idiag({2, 0, -2})));
  }

  TEST_CASE("matrix majorization implies the ad-spectrum partial-sum order") {
    sampling::Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      const int n = 3 + t % 2;
      RatVec w = sampling::random_sum_zero_ratvec(rng, n);
      RatVec z = sampling::random_sum_zero_ratvec(rng, n);
      if (majorizes_exact(w, z))
        CHECK(partial_sum_order(ad_spectrum(w), ad_spectrum(z)));
    }
    // The converse fails: (2,-1,-1) and (1,1,-2) have identical ad-spectra
    // (pairwise differences are blind to the outer sign flip), yet neither
    // matrix-majorizes the other. The matrix level is the faithful order.
    RatVec w = rv({2, -1, -1}), z = rv({1, 1, -2});
    CHECK(sorted_desc(ad_spectrum(w)) == sorted_desc(ad_spectrum(z)));
    CHECK_FALSE(majorizes_exact(w, z));
    CHECK_FALSE(majorizes_exact(z, w));
  }

  TEST_CASE("majorization implies the norm order on a family battery") {
    sampling::Rng rng(29);
    std::vector<OrbitFamily> battery;
    for (int i = 0; i < 20; ++i) battery.push_back(sampling::random_family(rng, 4, 2));
    int checked = 0;
    for (int t = 0; t < 60 && checked < 12; ++t) {
      RatVec w = sampling::random_sum_zero_ratvec(rng, 4);
      RatVec z = sampling::random_sum_zero_ratvec(rng, 4);
      if (!majorizes_exact(w, z)) continue;
      ++checked;
      for (const OrbitFamily& E : battery)
        for (NormKind k : kAllKinds)
          CHECK(norm_exact(E, z, k) <= norm_exact(E, w, k));
    }
    CHECK(checked > 0);
  }

  TEST_CASE("non-majorizing pairs admit a violated orbit functional") {
    // contrapositive witness: a failed partial sum at index m makes the
    // one-sided norm of the chamber-generator orbit omega_m strictly larger
    sampling::Rng rng(37);
    int found = 0;
    for (int t = 0; t < 60 && found < 20; ++t) {
      const int n = 3 + t % 3;
      RatVec w = sampling::random_sum_zero_ratvec(rng, n);
      RatVec z = sampling::random_sum_zero_ratvec(rng, n);
      if (majorizes_exact(w, z)) continue;
      ++found;
      RatVec wd = sorted_desc(w), zd = sorted_desc(z);
      std::vector<RatVec> omegas = weyl::chamber_generators(n);
      bool witnessed = false;
      Rat sw = 0, sz = 0;
      for (int m = 0; m + 1 < n; ++m) {
        sw += wd[m];
        sz += zd[m];
        if (sz > sw) {
          OrbitFamily Em = make_family(n, FamilyMode::KirwanHull, {omegas[m]});
          CHECK(norm_exact(Em, z, NormKind::OneSidedPlus) >
                norm_exact(Em, w, NormKind::OneSidedPlus));
          witnessed = true;
          break;
        }
      }
      CHECK(witnessed);
    }
    CHECK(found > 0);
  }

  TEST_CASE("every Ad-invariant polytope norm is a Hofer norm (ball reconstruction)") {
    sampling::Rng rng(31);
    for (int t = 0; t < 6; ++t) {
      const int n = 3 + t % 2;
      OrbitFamily E0 = sampling::random_family(rng, n, 2);
      Polytope B = unit_ball_cartan(E0, NormKind::Hofer);  // a symmetric invariant ball
      Polytope P = hofer_polytope(E0, NormKind::Hofer);    // its polar
      // E = (1/2) ext(P) as a discrete family reproduces the ball exactly
      std::vector<RatVec> reps;
      for (const RatVec& v : P.vertices) reps.push_back(weyl::dominant(vec_scale(v, rat_from_string("1/2"))));
      std::sort(reps.begin(), reps.end(), lex_less);
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      OrbitFamily E1 = make_family(n, FamilyMode::DiscreteUnion, reps);
      CHECK(same_vertex_set(hofer_polytope(E1, NormKind::Hofer), P));
      CHECK(same_vertex_set(unit_ball_cartan(E1, NormKind::Hofer), B));
    }
  }

  TEST_CASE("face of the ball: chamber part and stabilizer blocks") {
    OrbitFamily E = orbit_family({{2, 0, -2}});
    // regular x: all-ones blocks, nonempty dominant face on the unit sphere
    BallFace f = face_of_ball(E, rv({3, 1, -4}), NormKind::Hofer);
    CHECK(f.blocks == std::vector<int>{1, 1, 1});
    REQUIRE_FALSE(f.cartan_part.empty());
    for (const RatVec& v : f.cartan_part.vertices) {
      CHECK(weyl::is_dominant(v));
      CHECK(norm_exact(E, v, NormKind::Hofer) == 1);  // on the unit sphere
    }
    // scaling x leaves the face unchanged
    BallFace f2 = face_of_ball(E, vec_scale(rv({3, 1, -4}), Rat(7)), NormKind::Hofer);
    CHECK(same_vertex_set(f.cartan_part, f2.cartan_part));

    // singular x: multiplicity blocks reported
    OrbitFamily E4 = orbit_family({{3, -1, -1, -1}});
    BallFace f3 = face_of_ball(E4, rv({4, 0, 0, -4}), NormKind::Hofer);
    CHECK(f3.blocks == std::vector<int>{1, 2, 1});
    CHECK_FALSE(f3.cartan_part.empty());

    CHECK_THROWS_AS(face_of_ball(E, rv({0, 0, 0}), NormKind::Hofer), ZeroVector);
    CHECK_THROWS_AS(face_of_ball(E, rv({-1, 0, 1}), NormKind::Hofer), NotDominant);
  }

  TEST_CASE("injectivity radius of the spectral-normalized families") {
    // Hofer ball of orbit (1,-1) in su(2): ||x|| = 4*th for x = i diag(th,-th),
    // so the unit ball reaches th = 1/4 and the radius is 4*(pi - eps)... r = pi/(1/4) scaled:
    OrbitFamily E = orbit_family({{1, -1}});
    // ball vertices: (1/4, -1/4); largest coordinate 1/4; r = pi / (1/4)
    CHECK(injectivity_radius(E, NormKind::Hofer) == doctest::Approx(4.0 * 3.14159265358979).epsilon(1e-12));
  }
}
