#include <algorithm>
#include <random>

#include "support.hpp"
#include "toricfil/cone.hpp"
#include "toricfil/linalg.hpp"

using namespace toricfil;
using namespace toricfil::testing;

namespace {

// Independent dual-cone oracle in rank 2: the inward normals of the two
// boundary rays, found by rotating each ray a quarter turn.
std::vector<IntVec> dual_2d_oracle(const std::vector<IntVec>& rays) {
  std::vector<IntVec> out;
  for (const auto& r : rays) {
    for (IntVec c : {IntVec{-r[1], r[0]}, IntVec{r[1], -r[0]}}) {
      bool ok = true;
      for (const auto& s : rays) ok = ok && c[0] * s[0] + c[1] * s[1] >= 0;
      if (ok) out.push_back(primitive(c));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Irreducible elements of the dual semigroup inside a box, by brute force.
std::vector<IntVec> hilbert_oracle(const Cone& cone, long long radius) {
  std::vector<IntVec> pts;
  for (long long i = -radius; i <= radius; ++i)
    for (long long j = -radius; j <= radius; ++j)
      if ((i || j) && in_dual(cone, IntVec{i, j})) pts.push_back({i, j});
  std::vector<IntVec> out;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& a : pts) {
      IntVec b{p[0] - a[0], p[1] - a[1]};
      if ((b[0] || b[1]) && in_dual(cone, b)) reducible = true;
    }
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(q("6/4")), "3/2");
  EXPECT_EQ(to_string(q("-4/2")), "-2");
  EXPECT_EQ(to_string(frac(2, -4)), "-1/2");
  EXPECT_EQ(q("3/2").get_den(), 2);
  EXPECT_ERROR_KIND(q("1/0"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(q("abc"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(q("1.5"), ErrorKind::ParseError);
}

TEST(DualCone, Goldens) {
  EXPECT_EQ(dual_cone({{1, 0}, {0, 1}}), (std::vector<IntVec>{{0, 1}, {1, 0}}));
  EXPECT_EQ(dual_cone({{1, 0}, {1, 2}}), (std::vector<IntVec>{{0, 1}, {2, -1}}));
  EXPECT_EQ(dual_cone({{1}}), (std::vector<IntVec>{{1}}));
  EXPECT_EQ(dual_cone({{1, 0}, {1, 2}}), dual_2d_oracle({{1, 0}, {1, 2}}));
}

TEST(DualCone, Errors) {
  EXPECT_ERROR_KIND(dual_cone({{1, 0}}), ErrorKind::NotFullDimensional);
  EXPECT_ERROR_KIND(dual_cone({{1, 0}, {-1, 0}, {0, 1}}), ErrorKind::NotStronglyConvex);
}

TEST(DualCone, InvolutionOnRandomCones) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-6, 6);
  int checked = 0;
  while (checked < 60) {
    IntVec a{d(rng), d(rng)}, b{d(rng), d(rng)};
    if (a[0] * b[1] - a[1] * b[0] == 0) continue;
    std::vector<IntVec> rays{primitive(a), primitive(b)};
    auto dual = dual_cone(rays);
    EXPECT_EQ(dual, dual_2d_oracle(rays));
    auto back = dual_cone(dual);
    std::sort(rays.begin(), rays.end());
    EXPECT_EQ(back, rays);
    ++checked;
  }
}

TEST(DualCone, InvolutionRank3) {
  std::vector<IntVec> rays{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}, {0, 0, 1}};
  auto c = Cone::make(rays);
  EXPECT_EQ(dual_cone(c.dual_rays()), c.rays());
  // Redundant rays are dropped.
  EXPECT_EQ(c.rays(), (std::vector<IntVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Membership, Orthant) {
  auto c = Cone::orthant(2);
  EXPECT_EQ(membership(c, IntVec{1, 1}), Membership::Interior);
  EXPECT_EQ(membership(c, IntVec{1, 0}), Membership::Boundary);
  EXPECT_EQ(membership(c, IntVec{-1, 2}), Membership::Outside);
  EXPECT_ERROR_KIND(membership(c, IntVec{1, 1, 1}), ErrorKind::DimensionMismatch);
}

TEST(Membership, ScalingInvariance) {
  auto c = Cone::make({{1, 0}, {1, 2}});
  for (const auto& v : {qv({"1", "1"}), qv({"1", "2"}), qv({"-1", "1"}), qv({"3", "1/2"})})
    for (const char* s : {"1/3", "2", "7/5"})
      EXPECT_EQ(membership(c, v), membership(c, scale(v, q(s))));
}

TEST(Hilbert, Goldens) {
  EXPECT_EQ(hilbert_generators(Cone::orthant(2)), (std::vector<IntVec>{{0, 1}, {1, 0}}));
  EXPECT_EQ(hilbert_generators(Cone::make({{1, 0}, {1, 2}})), (std::vector<IntVec>{{0, 1}, {1, 0}, {2, -1}}));
  EXPECT_EQ(hilbert_generators(Cone::orthant(1)), (std::vector<IntVec>{{1}}));
}

TEST(Hilbert, MatchesIrreducibilityOracle) {
  for (auto rays : std::vector<std::vector<IntVec>>{{{1, 0}, {1, 2}}, {{1, 0}, {1, 5}}, {{2, -1}, {1, 3}}, {{1, 0}, {3, 4}}}) {
    auto c = Cone::make(rays);
    auto h = hilbert_generators(c);
    std::sort(h.begin(), h.end());
    EXPECT_EQ(h, hilbert_oracle(c, 8)) << to_string(rays[0]) << " " << to_string(rays[1]);
  }
}

TEST(Linalg, DetAndRank) {
  Matrix m{qv({"1", "2"}), qv({"3", "4"})};
  EXPECT_EQ(det(m), -2);
  EXPECT_EQ(rank(Matrix{qv({"1", "2"}), qv({"2", "4"})}), 1u);
}

TEST(Linalg, VertexEnumeration) {
  // {x >= 0, y >= 0, x + y/2 >= 1}
  auto v = vertex_enumeration({qv({"1", "0"}), qv({"0", "1"}), qv({"1", "1/2"})}, qv({"0", "0", "1"}));
  std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
  EXPECT_EQ(v.vertices, (std::vector<Vec>{qv({"0", "2"}), qv({"1", "0"})}));
  EXPECT_EQ(v.rays.size(), 2u);
}
