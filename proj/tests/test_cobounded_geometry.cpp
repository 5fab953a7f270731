#include <algorithm>

#include "support.hpp"
#include "toricfil/linalg.hpp"
#include "toricfil/oracles.hpp"
#include "toricfil/region.hpp"

using namespace toricfil;
using namespace toricfil::testing;

namespace {

std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

// Lattice-count covolume oracle: #{m outside lambda P} / lambda^n with the
// 1/lambda boundary term removed by Richardson extrapolation.
Rational count_covolume(const CoboundedRegion& p, long long lambda) {
  auto e1 = brute_multiplicity(Filtration(SaturatedFiltration{p}), {lambda}).front();
  auto e2 = brute_multiplicity(Filtration(SaturatedFiltration{p}), {2 * lambda}).front();
  return (2 * e2 - e1) / factorial(p.cone().rank());
}

}  // namespace

TEST(Vrep, Goldens) {
  EXPECT_EQ(sorted(vrep(smooth_region({{"1", "1", "1"}}))), (std::vector<Vec>{qv({"0", "1"}), qv({"1", "0"})}));
  EXPECT_EQ(sorted(vrep(v0_region())), (std::vector<Vec>{qv({"0", "2"}), qv({"1", "0"})}));
  EXPECT_EQ(sorted(vrep(smooth_region({{"5", "1", "10"}}))), (std::vector<Vec>{qv({"0", "10"}), qv({"2", "0"})}));
}

TEST(SupportValue, Goldens) {
  EXPECT_EQ(support_value(smooth_region({{"1", "1", "1"}}), IntVec{1, 1}), 1);
  EXPECT_EQ(support_value(v0_region(), IntVec{1, 1}), 1);
  EXPECT_EQ(support_value(smooth_region({{"5", "1", "10"}}), IntVec{1, 1}), 2);
  EXPECT_ERROR_KIND(support_value(v0_region(), IntVec{-1, 1}), ErrorKind::NormalOutsideCone);
}

TEST(Cogauge, Goldens) {
  EXPECT_EQ(cogauge(smooth_region({{"1", "1", "1"}}), IntVec{2, 3}), 5);
  EXPECT_EQ(cogauge(v0_region(), IntVec{1, 1}), q("3/2"));
  EXPECT_EQ(cogauge(smooth_region({{"1", "1", "1"}, {"1", "1/2", "1"}}), IntVec{0, 4}), 2);
  EXPECT_ERROR_KIND(cogauge(v0_region(), IntVec{-1, 1}), ErrorKind::PointOutsideDualCone);
}

TEST(Cogauge, MembershipEquivalence) {
  auto p = meet(v0_region(), smooth_region({{"3", "1", "2"}}));
  for (long long i = 0; i <= 6; ++i)
    for (long long j = 0; j <= 6; ++j) {
      if (!i && !j) continue;
      IntVec m{i, j};
      const Rational t = cogauge(p, m);
      for (const char* s : {"1/3", "1/2", "1", "3/2", "2", "5/2"}) {
        const Rational lambda = q(s);
        EXPECT_EQ(t >= lambda, scale_region(p, lambda).contains(m));
      }
    }
}

TEST(Meet, Goldens) {
  auto p = v0_region();
  EXPECT_EQ(meet(p, p), p);
  EXPECT_EQ(sorted(vrep(meet(v0_region(), v1_region()))),
            (std::vector<Vec>{qv({"0", "2"}), qv({"2/3", "2/3"}), qv({"2", "0"})}));
  EXPECT_EQ(meet(smooth_region({{"1", "1", "1"}}), smooth_region({{"1", "1", "2"}})), smooth_region({{"1", "1", "2"}}));
  EXPECT_ERROR_KIND(meet(p, CoboundedRegion::make(Cone::make({{1, 0}, {1, 2}}), {Halfspace::make(qv({"2", "1"}), 1)})),
                    ErrorKind::ConeMismatch);
}

TEST(HullJoin, Goldens) {
  EXPECT_EQ(hull_join(v0_region(), v1_region()), smooth_region({{"1", "1", "1"}}));
  EXPECT_EQ(hull_join(v0_region(), v0_region()), v0_region());
  EXPECT_EQ(hull_join(smooth_region({{"1", "1", "1"}}), smooth_region({{"1", "1", "2"}})), smooth_region({{"1", "1", "1"}}));
}

TEST(Covolume, GoldensWithShoelaceOracle) {
  for (auto [p, expected] : std::vector<std::pair<CoboundedRegion, const char*>>{
           {smooth_region({{"1", "1", "1"}}), "1/2"}, {v0_region(), "1"}, {meet(v0_region(), v1_region()), "4/3"}}) {
    EXPECT_EQ(shoelace_covolume_2d(p), q(expected));
    EXPECT_EQ(covolume(p), q(expected));
  }
}

TEST(Covolume, RandomAgainstShoelace) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto p = random_region({seed, 2, 1, 4, 5});
    EXPECT_EQ(covolume(p), shoelace_covolume_2d(p)) << seed;
  }
  auto cone = Cone::make({{1, 0}, {1, 2}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = random_region({seed, 2, 1, 4, 5}, cone);
    EXPECT_EQ(covolume(p), shoelace_covolume_2d(p)) << seed;
  }
}

TEST(Covolume, Rank3AgainstLatticeCount) {
  auto cone = Cone::orthant(3);
  auto simplex = CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "1", "1"}), 1)});
  EXPECT_EQ(covolume(simplex), q("1/6"));
  auto p = CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "1", "1"}), 1), Halfspace::make(qv({"2", "1", "1"}), 3)});
  EXPECT_NEAR(to_double(count_covolume(p, 40)), to_double(covolume(p)), 2e-3 * to_double(covolume(p)) + 1e-3);
}

TEST(Scale, Goldens) {
  auto p = smooth_region({{"1", "1", "1"}});
  EXPECT_EQ(scale_region(p, 2), smooth_region({{"1", "1", "2"}}));
  EXPECT_EQ(covolume(scale_region(v0_region(), 2)), 4 * covolume(v0_region()));
  EXPECT_EQ(scale_region(p, 1), p);
  EXPECT_ERROR_KIND(scale_region(p, 0), ErrorKind::NonpositiveScale);
}

TEST(Region, ValidationErrors) {
  auto cone = Cone::orthant(2);
  EXPECT_ERROR_KIND(CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "0"}), 1)}), ErrorKind::NotCobounded);
  EXPECT_ERROR_KIND(CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "-1"}), 1)}), ErrorKind::NormalOutsideCone);
  EXPECT_ERROR_KIND(CoboundedRegion::make(cone, {}), ErrorKind::ValidationError);
  // {x >= 1/2, x + y >= 2} misses the y-axis, so it is not cobounded either.
  EXPECT_ERROR_KIND(CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "0"}), frac(1, 2)), Halfspace::make(qv({"1", "1"}), 2)}),
                    ErrorKind::NotCobounded);
  // Redundant interior halfspaces are dropped.
  auto p = CoboundedRegion::make(cone, {Halfspace::make(qv({"1", "2"}), 1), Halfspace::make(qv({"1", "1"}), 2)});
  EXPECT_EQ(p, smooth_region({{"1", "1", "2"}}));
}

TEST(Region, LatticeProperties) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto p = random_region({seed, 2, 1, 3, 5});
    auto r = random_region({seed + 1000, 2, 1, 3, 5});
    auto m = meet(p, r), j = hull_join(p, r);
    EXPECT_GE(covolume(m), std::max(covolume(p), covolume(r)));
    EXPECT_LE(covolume(j), std::min(covolume(p), covolume(r)));
    EXPECT_LE(covolume(m) + covolume(j), covolume(p) + covolume(r));
    for (const auto& u : std::vector<IntVec>{{1, 1}, {1, 3}, {4, 1}, {2, 5}})
      EXPECT_EQ(support_value(j, u), std::min(support_value(p, u), support_value(r, u)));
  }
}

TEST(Region, CogaugeDuality) {
  // h_P(u) = inf over lattice points of <m, u> / tau_P(m); the infimum is
  // reached at a vertex direction, so a 30-wide window suffices.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_region({seed, 2, 1, 3, 4});
    for (const auto& h : p.halfspaces()) {
      Rational best = -1;
      for (long long i = 0; i <= 30; ++i)
        for (long long j = 0; j <= 30; ++j) {
          if (!i && !j) continue;
          IntVec m{i, j};
          Rational v = rat(dot(m, h.normal)) / cogauge(p, m);
          if (best < 0 || v < best) best = v;
        }
      EXPECT_EQ(best, support_value(p, h.normal)) << seed;
    }
  }
}

TEST(Triangulation, FaceSimplicesCoverSquare) {
  std::vector<Vec> pts{qv({"0", "0"}), qv({"1", "0"}), qv({"1", "1"}), qv({"0", "1"})};
  std::vector<LinearConstraint> cons{{qv({"1", "0"}), 0}, {qv({"0", "1"}), 0}, {qv({"-1", "0"}), -1}, {qv({"0", "-1"}), -1}};
  auto simplices = triangulate_face(pts, cons, {0, 1, 2, 3}, 2);
  Rational area = 0;
  for (const auto& s : simplices)
    area += abs(det({sub(pts[s[1]], pts[s[0]]), sub(pts[s[2]], pts[s[0]])})) / 2;
  EXPECT_EQ(area, 1);
}
