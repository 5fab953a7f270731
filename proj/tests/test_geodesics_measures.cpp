#include <random>

#include "support.hpp"
#include "toricfil/geodesic.hpp"
#include "toricfil/metrics.hpp"
#include "toricfil/oracles.hpp"

using namespace toricfil;
using namespace toricfil::testing;

namespace {

Geodesic pair_geodesic() { return Geodesic::make({v0_region()}, {v1_region()}); }

// Rank-1 endpoints {x >= a} and {x >= b}, i.e. multiplicities a and b.
Geodesic rank1(const Rational& a, const Rational& b) {
  auto c = Cone::orthant(1);
  return Geodesic::make({CoboundedRegion::make(c, {Halfspace::make({Rational(1)}, a)})},
                        {CoboundedRegion::make(c, {Halfspace::make({Rational(1)}, b)})});
}

Geodesic random_geodesic(std::uint64_t seed) {
  return Geodesic::make({random_region({seed, 2, 1, 3, 4})}, {random_region({seed + 4242, 2, 1, 3, 4})});
}

}  // namespace

TEST(GeodesicCogauge, Goldens) {
  auto g = pair_geodesic();
  EXPECT_EQ(geodesic_cogauge(g, 0, IntVec{3, 1}), cogauge(v0_region(), IntVec{3, 1}));
  EXPECT_EQ(geodesic_cogauge(g, q("1/2"), IntVec{1, 1}), q("3/2"));
  auto r = rank1(1, 2);
  EXPECT_EQ(geodesic_cogauge(r, q("1/2"), IntVec{1}), q("3/4"));
  EXPECT_EQ(multiplicity(Filtration(geodesic_point(r, q("1/2")))), q("4/3"));
  EXPECT_ERROR_KIND(geodesic_cogauge(g, q("3/2"), IntVec{1, 1}), ErrorKind::OutOfRangeT);
}

TEST(GeodesicCogauge, SumOfIntersectionsBruteForce) {
  // m is in sum_{(1-t)mu + t nu = lambda} a_mu,0 cap a_nu,1 iff some split
  // mu <= tau_0(m), nu <= tau_1(m) exists; test on a grid of splits.
  auto g = pair_geodesic();
  for (long long i = 0; i <= 6; ++i)
    for (long long j = 0; j <= 6; ++j) {
      if (!i && !j) continue;
      IntVec m{i, j};
      for (const char* ts : {"1/4", "1/2", "2/3"})
        for (const char* ls : {"1/2", "1", "2", "5/2"}) {
          const Rational t = q(ts), lambda = q(ls);
          bool member = false;
          for (int k = 0; k <= 400 && !member; ++k) {
            const Rational mu = lambda / (1 - t) * frac(k, 400);
            const Rational nu = (lambda - (1 - t) * mu) / t;
            member = cogauge(v0_region(), m) >= mu && cogauge(v1_region(), m) >= nu;
          }
          if (member) EXPECT_GE(geodesic_cogauge(g, t, m), lambda);
        }
    }
}

TEST(GeodesicIdeal, Goldens) {
  auto g = pair_geodesic();
  EXPECT_EQ(geodesic_ideal_at(g, 0, 2), ideal_at({v0_region()}, 2));
  EXPECT_EQ(geodesic_ideal_at(g, 1, 2), ideal_at({v1_region()}, 2));
  auto r = rank1(1, 2);
  EXPECT_EQ(geodesic_ideal_at(r, q("1/2"), 1).generators(), (std::vector<IntVec>{{2}}));
}

TEST(GeodesicIdeal, InteriorPointsAreSaturated) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = random_geodesic(seed);
    for (const char* ts : {"1/3", "1/2"})
      for (const char* ls : {"1", "3/2"})
        EXPECT_EQ(geodesic_ideal_at(g, q(ts), q(ls)), ideal_at(geodesic_point(g, q(ts)), q(ls))) << seed;
  }
}

TEST(GeodesicSlopes, SupportValueDominatesHarmonicSlope) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_geodesic(seed);
    for (const char* ts : {"1/4", "1/2", "3/4"}) {
      const Rational t = q(ts);
      for (const auto& u : std::vector<Vec>{qv({"1", "1"}), qv({"2", "1"}), qv({"1", "5"})}) {
        EXPECT_GE(support_value(geodesic_region(g, t), u), harmonic_slope(g, t, u));
      }
    }
  }
  // The harmonic formula is not an identity in rank 2: at t = 1/2 and u = (1,1)
  // the pair gives h_t = 4/3 while the slope formula gives 1.
  auto g = pair_geodesic();
  EXPECT_EQ(support_value(geodesic_region(g, q("1/2")), qv({"1", "1"})), q("4/3"));
  EXPECT_EQ(harmonic_slope(g, q("1/2"), qv({"1", "1"})), 1);
}

TEST(GeodesicSlopes, Rank1ClosedForm) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> d(1, 9);
  for (int i = 0; i < 20; ++i) {
    const Rational a = frac(d(rng), d(rng)), b = frac(d(rng), d(rng)), t = frac(d(rng) - 1, 8);
    auto g = rank1(a, b);
    const Rational c = a * b / (t * a + (1 - t) * b);
    EXPECT_EQ(harmonic_slope(g, t, {Rational(1)}), c);
    EXPECT_EQ(geodesic_multiplicity_exact(g, t), c);
    EXPECT_TRUE(geodesic_multiplicity(g, t, q("1/1000000")).contains(c));
  }
}

TEST(GeodesicSubinterval, MeetWithLaterPointIsContained) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_geodesic(seed);
    const SaturatedFiltration f0 = g.start();
    for (auto [t, t2] : std::vector<std::pair<const char*, const char*>>{{"1/4", "1/2"}, {"1/3", "1"}}) {
      auto m = std::get<SaturatedFiltration>(meet_filtrations(f0, geodesic_point(g, q(t2))));
      EXPECT_TRUE(is_contained(m, geodesic_point(g, q(t))));
      for (const char* ls : {"1", "2"}) {
        auto inner = ideal_at(m, q(ls)), outer = geodesic_ideal_at(g, q(t), q(ls));
        for (const auto& gen : inner.generators()) EXPECT_TRUE(outer.contains(gen));
      }
    }
  }
}

TEST(GeodesicMultiplicity, EndpointsExact) {
  auto g = pair_geodesic();
  auto e0 = geodesic_multiplicity(g, 0, q("1/10"));
  EXPECT_EQ(e0.lo, 2);
  EXPECT_EQ(e0.hi, 2);
}

TEST(GeodesicMultiplicity, CertifiedIntervalAgreesWithLatticeCount) {
  auto g = pair_geodesic();
  const Rational t = q("1/2");
  QuadratureStats stats;
  auto iv = certified_sublevel_multiplicity(g.cone(), geodesic_forms(g, t), q("1/1000000"), 1000000, &stats);
  EXPECT_LE(iv.width(), q("1/1000000"));
  EXPECT_TRUE(iv.contains(geodesic_multiplicity_exact(g, t)));
  const double naive = to_double(geodesic_lattice_estimate(g, t, 400));
  const double richardson = to_double(geodesic_richardson_estimate(g, t, 420));
  EXPECT_NEAR(naive, to_double(iv.mid()), 2e-2);
  EXPECT_NEAR(richardson, to_double(iv.mid()), 1e-3);
  EXPECT_GT(stats.cells, 0u);
}

TEST(GeodesicMultiplicity, RandomIntervalsContainExact) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = random_geodesic(seed);
    for (const char* ts : {"1/3", "3/4"}) {
      auto iv = geodesic_multiplicity(g, q(ts), q("1/10000"));
      EXPECT_TRUE(iv.contains(geodesic_multiplicity_exact(g, q(ts)))) << seed;
      EXPECT_LE(iv.width(), q("1/10000"));
    }
  }
}

TEST(GeodesicMultiplicity, ToleranceTooTight) {
  // At t = 1/3 the forms (1, 5/9) and (2/3, 1) cross on the ray (4,3), which
  // no finite bisection of the section reaches.
  auto g = Geodesic::make({smooth_region({{"1", "1/3", "1"}, {"1/2", "1", "1"}})}, {smooth_region({{"1", "1", "1"}})});
  EXPECT_ERROR_KIND(certified_sublevel_multiplicity(g.cone(), geodesic_forms(g, q("1/3")), q("1/1000000000000"), 8),
                    ErrorKind::ToleranceTooTight);
  auto iv = geodesic_multiplicity(g, q("1/3"), q("1/1000000000000"));
  EXPECT_TRUE(iv.contains(geodesic_multiplicity_exact(g, q("1/3"))));
  EXPECT_GT(iv.width(), 0);
}

TEST(GeodesicAdditivity, PairAndRank1) {
  auto g = pair_geodesic();
  auto rep = geodesic_additivity_check(g, {{q("1/2"), q("1")}, {q("1/4"), q("3/4")}}, q("1/1000000"));
  EXPECT_TRUE(rep.pass);
  for (const auto& term : rep.terms) {
    EXPECT_EQ(term.exact_defect, 0);
    EXPECT_LE(abs(term.numeric_defect.mid()), q("1/100000"));
  }
  auto r = rank1(1, 3);
  EXPECT_TRUE(geodesic_additivity_check(r, {{q("1/3"), q("2/3")}, {q("0"), q("1")}}, q("1/1000000")).pass);
}

TEST(GeodesicLipschitz, Bound) {
  auto g = pair_geodesic();
  EXPECT_EQ(g.d(), 2);
  // n^2 2^(n+1) (D+1)^(n-1) D (D-1) e(meet) = 4 * 8 * 3 * 2 * 1 * 8/3.
  EXPECT_EQ(geodesic_lipschitz_constant(g), 512);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"0", "1/4"}, {"1/4", "3/4"}, {"1/2", "1"}}) {
    auto rep = geodesic_lipschitz_check(g, q(a), q(b));
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.lhs, rep.rhs);
  }
  auto same = geodesic_lipschitz_check(g, q("1/3"), q("1/3"));
  EXPECT_EQ(same.lhs, 0);
  EXPECT_TRUE(same.pass);
  auto r = rank1(1, 2);
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(geodesic_lipschitz_check(r, 0, frac(k, 4)).pass);
}

TEST(DH, UnionMassGoldens) {
  auto g = pair_geodesic();
  EXPECT_EQ(dh_union_mass(g, 1, 1), q("8/3"));
  EXPECT_EQ(dh_union_mass(g, 2, 2), 4 * dh_union_mass(g, 1, 1));
  Rational prev = 0;
  for (int x : {1, 2, 4, 8}) {
    const Rational u = dh_union_mass(g, x, 1);
    EXPECT_GE(u, prev);
    prev = u;
  }
}

TEST(DH, Homogeneity) {
  auto g = pair_geodesic();
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const Rational x = frac(i, 3), y = frac(j, 3);
      EXPECT_EQ(dh_union_mass(g, 2 * x, 2 * y), 4 * dh_union_mass(g, x, y));
    }
}

TEST(DH, GridMeasureAxioms) {
  auto g = pair_geodesic();
  const Rational step = q("1/8");
  auto grid = dh_grid(g, step, 32);
  auto serial = dh_grid_serial(g, step, 32);
  EXPECT_EQ(grid.values, serial.values);
  const Rational d = rat(g.d());
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j) {
      const Rational mass = grid.rectangle(i, j);
      EXPECT_GE(mass, 0);
      const Rational a = step * rat(static_cast<long long>(i)), b = step * rat(static_cast<long long>(j));
      EXPECT_EQ(mass, dh_rectangle_mass(g, {a, b, step, step}));
      EXPECT_LE(mass, dh_mass_bound(g, a, b) * step * step);
      // Outside the wedge {x / D <= y <= D x} the cell carries no mass.
      if (b + step < a / d || b > d * (a + step)) EXPECT_EQ(mass, 0);
      // Additivity across a shared edge.
      if (i + 1 < 32)
        EXPECT_EQ(mass + grid.rectangle(i + 1, j), dh_rectangle_mass(g, {a, b, 2 * step, step}));
    }
}

TEST(DH, HalfPlaneMassMatchesGeodesicMultiplicity) {
  // mu{(1-t) x + t y < 1} = e(F_t); cells inside give a lower bound, cells
  // meeting the half-plane an upper bound.
  auto g = pair_geodesic();
  const Rational t = q("1/2"), step = q("1/32");
  const std::size_t count = 96;
  auto grid = dh_grid(g, step, count);
  Rational inside = 0, touching = 0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const Rational x = step * rat(static_cast<long long>(i)), y = step * rat(static_cast<long long>(j));
      if ((1 - t) * x + t * y >= 1) continue;
      touching += grid.rectangle(i, j);
      if ((1 - t) * (x + step) + t * (y + step) <= 1) inside += grid.rectangle(i, j);
    }
  const Rational e = geodesic_multiplicity_exact(g, t);
  EXPECT_LE(inside, e);
  EXPECT_GE(touching, e);
}
