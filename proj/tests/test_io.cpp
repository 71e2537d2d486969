#include <doctest.h>

#include "hofer/io.hpp"
#include "hofer/sampling.hpp"
#include "test_util.hpp"

using namespace hofer;
using testutil::orbit_family;
using testutil::rv;

TEST_SUITE("io") {
  TEST_CASE("rational round trips and snapping") {
    CHECK(rat_to_string(rat_from_string("-7/3")) == "-7/3");
    CHECK(rat_to_string(rat_from_string("5")) == "5");
    CHECK(io::rat_from_json(io::json("2/6")) == rat_from_string("1/3"));
    CHECK(io::rat_from_json(io::json(3)) == 3);
    CHECK(io::rat_from_json(io::json(0.5)) == rat_from_string("1/2"));
    CHECK(io::rat_from_json(io::json(1.0 / 3.0), 100) == rat_from_string("1/3"));
    CHECK_THROWS_AS(io::rat_from_json(io::json("abc")), SchemaError);
    CHECK_THROWS_AS(io::rat_from_json(io::json::array()), SchemaError);
  }

  TEST_CASE("family round trip") {
    OrbitFamily E = orbit_family({{2, -1, -1}, {1, 0, -1}}, FamilyMode::DiscreteUnion);
    io::json j = io::family_to_json(E);
    OrbitFamily F = io::family_from_json(j);
    CHECK(F.n == E.n);
    CHECK(F.mode == E.mode);
    CHECK(F.vertices == E.vertices);
    CHECK_THROWS_AS(io::family_from_json(io::json{{"n", 3}}), SchemaError);
    io::json bad = io::family_to_json(E);
    bad["vertices"][0][0] = "x";
    CHECK_THROWS_AS(io::family_from_json(bad), SchemaError);
    // NotFull keeps its identity through parsing (exit-code contract)
    io::json zero = {{"n", 3}, {"vertices", io::json::array({io::json::array({"0", "0", "0"})})}};
    CHECK_THROWS_AS(io::family_from_json(zero), NotFull);
  }

  TEST_CASE("matrix and path round trips") {
    sampling::Rng rng(3);
    SkewHermitian x = sampling::random_skew(rng, 3, 1.0);
    SkewHermitian y = io::skew_from_json(io::skew_to_json(x));
    CHECK((x.mat() - y.mat()).norm() < 1e-15);

    GroupPath p;
    p.times = {0.0, 0.5, 1.0};
    for (int k = 0; k < 3; ++k)
      p.points.push_back(group_exp(scale_by(x, 0.5 * k)));
    GroupPath q = io::path_from_json(io::path_to_json(p));
    CHECK(q.times == p.times);
    for (int k = 0; k < 3; ++k) CHECK((q.points[k].mat() - p.points[k].mat()).norm() < 1e-15);

    DerivativePath d;
    d.times = {0.0, 1.0};
    d.derivatives = {x};
    DerivativePath e = io::derivs_from_json(io::derivs_to_json(d));
    CHECK((e.derivatives[0].mat() - x.mat()).norm() < 1e-15);
    io::json badd = io::derivs_to_json(d);
    badd["times"] = {0.0};
    CHECK_THROWS_AS(io::derivs_from_json(badd), SchemaError);
  }

  TEST_CASE("polytope serialization carries the H-representation when present") {
    Polytope P = hull(weyl::orbit(rv({1, 0, -1})));
    io::json j1 = io::polytope_to_json(P);
    CHECK(j1["vertices"].size() == 6);
    CHECK_FALSE(j1.contains("facets"));
    ensure_hrep(P);
    io::json j2 = io::polytope_to_json(P);
    CHECK(j2["facets"].size() == 6);
  }

  TEST_CASE("deterministic serialization") {
    OrbitFamily E = orbit_family({{2, -1, -1}});
    Polytope P = hofer_polytope(E, NormKind::Hofer);
    CHECK(io::polytope_to_json(P).dump(2) == io::polytope_to_json(P).dump(2));
  }

  TEST_CASE("csv emitters") {
    Polytope P = hull(weyl::orbit(rv({1, 0, -1})));
    std::string csv = io::polytope_slice_csv(P, 0, 2);
    CHECK(csv.rfind("x0,x2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 vertices
    CHECK_THROWS_AS(io::polytope_slice_csv(P, 0, 5), std::invalid_argument);

    DerivativePath d;
    d.times = {0.0, 1.0};
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = Cplx(0, 1);
    m(1, 1) = Cplx(0, -1);
    d.derivatives = {SkewHermitian(m)};
    std::string ecsv = io::eigenvalue_csv(d);
    CHECK(ecsv.rfind("t,lambda1,lambda2\n", 0) == 0);
  }
}
