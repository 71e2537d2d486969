#include <doctest.h>

#include "hofer/lp.hpp"
#include "test_util.hpp"

using namespace hofer;
using testutil::rv;

TEST_SUITE("lp") {
  TEST_CASE("optimal solve with duals") {
    // min -x1 - x2  s.t.  x1 + x2 + s = 1
    RatMat A(1, 3);
    A.at(0, 0) = 1; A.at(0, 1) = 1; A.at(0, 2) = 1;
    RatVec b{Rat(1)};
    RatVec c{Rat(-1), Rat(-1), Rat(0)};
    LpResult r = lp_solve(A, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == -1);
    CHECK(r.x[0] + r.x[1] == 1);
  }

  TEST_CASE("infeasible system yields a Farkas certificate") {
    // x1 = -1, x1 >= 0 infeasible
    RatMat A(1, 1);
    A.at(0, 0) = 1;
    RatVec b{Rat(-1)};
    LpResult r = lp_solve(A, b, RatVec{Rat(0)});
    REQUIRE(r.status == LpStatus::Infeasible);
    // y * A <= 0 and y * b > 0
    CHECK(r.farkas[0] * A.at(0, 0) <= 0);
    CHECK(r.farkas[0] * b[0] > 0);
  }

  TEST_CASE("unbounded detection") {
    // min -x  s.t.  0*x = 0
    RatMat A(1, 1);
    A.at(0, 0) = 0;
    LpResult r = lp_solve(A, RatVec{Rat(0)}, RatVec{Rat(-1)});
    CHECK(r.status == LpStatus::Unbounded);
  }

  TEST_CASE("convex hull membership and separation") {
    std::vector<RatVec> pts = {rv({1, 0, -1}), rv({-1, 1, 0}), rv({0, -1, 1})};
    CHECK(in_convex_hull(rv({0, 0, 0}), pts));
    RatVec sep;
    RatVec outside = rv({2, 0, -2});
    REQUIRE_FALSE(in_convex_hull(outside, pts, -1, &sep));
    Rat mx = dot(sep, pts[0]);
    for (const RatVec& p : pts) mx = std::max(mx, dot(sep, p));
    CHECK(dot(sep, outside) > mx);
  }

  TEST_CASE("gauge LP") {
    std::vector<RatVec> pts = {rv({1, -1}), rv({-1, 1})};
    CHECK(*gauge_lp(rv({1, -1}), pts) == 1);
    auto half = gauge_lp(testutil::rvq({"1/2", "-1/2"}), pts);
    CHECK(*half == rat_from_string("1/2"));
    CHECK(*gauge_lp(rv({0, 0}), pts) == 0);
  }

  TEST_CASE("cone membership") {
    std::vector<RatVec> gens = {rv({1, -1, 0}), rv({0, 1, -1})};
    CHECK(in_cone(rv({1, 0, -1}), gens));
    CHECK(in_cone(rv({5, -2, -3}), gens));
    CHECK_FALSE(in_cone(rv({-1, 1, 0}), gens));
  }

  TEST_CASE("rank") {
    CHECK(rank_of({rv({1, -1, 0}), rv({0, 1, -1}), rv({1, 0, -1})}) == 2);
    CHECK(rank_of({rv({0, 0, 0})}) == 0);
    CHECK(rank_of({}) == 0);
  }

  TEST_CASE("degenerate membership: gauge agrees with hull scaling on random data") {
    sampling::Rng rng(23);
    for (int t = 0; t < 30; ++t) {
      const int n = 3 + (t % 2);
      std::vector<RatVec> pts;
      for (int i = 0; i < 2 * n; ++i) pts.push_back(sampling::random_sum_zero_ratvec(rng, n));
      RatVec x = sampling::random_sum_zero_ratvec(rng, n);
      auto g = gauge_lp(x, pts);
      if (g) {
        CHECK(*g >= 0);
        // x lies in g * conv(pts): membership of x scaled into the hull
        if (*g > 0) {
          RatVec xs = vec_scale(x, 1 / *g);
          CHECK(in_convex_hull(xs, pts));
        }
      }
    }
  }
}
