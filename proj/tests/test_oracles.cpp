#include <cmath>

#include "support.hpp"
#include "toricfil/io.hpp"
#include "toricfil/oracles.hpp"

using namespace toricfil;
using namespace toricfil::testing;

namespace {
MonomialIdeal madic(int rank) {
  std::vector<IntVec> gens;
  for (int i = 0; i < rank; ++i) {
    IntVec g(rank, 0);
    g[i] = 1;
    gens.push_back(g);
  }
  return MonomialIdeal::make(Cone::orthant(rank), gens);
}
}  // namespace

TEST(BruteMultiplicity, MAdicGoldens) {
  Filtration f = AdicFiltration::make(madic(2), 1);
  // l(R/m^10) = 55, so 2 * 55 / 100.
  EXPECT_EQ(brute_multiplicity(f, {10}).front(), q("11/10"));
  EXPECT_EQ(brute_multiplicity(Filtration(saturate(f)), {10}).front(), q("11/10"));
  EXPECT_EQ(brute_colength(f, 10), 55);
  Filtration r1 = AdicFiltration::make(madic(1), 1);
  EXPECT_EQ(brute_multiplicity(r1, {7, 30}), (std::vector<Rational>{1, 1}));
  Filtration r3 = AdicFiltration::make(madic(3), 1);
  // C(m + 2, 3) monomials of degree < m, times 3! / m^3.
  EXPECT_EQ(brute_multiplicity(r3, {6}).front(), frac(6 * 56, 216));
}

TEST(BruteMultiplicity, ConvergesToExact) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Filtration f = SaturatedFiltration{random_region({seed, 2, 1, 3, 5})};
    const double e = to_double(multiplicity(f));
    auto vals = brute_multiplicity(f, {20, 40, 80});
    double prev = 1e300;
    for (const auto& v : vals) {
      const double err = std::abs(to_double(v) - e);
      EXPECT_LE(err, prev * 1.05 + 1e-12) << seed;
      prev = err;
    }
    EXPECT_LE(prev, 0.1 * e) << seed;
  }
}

TEST(BruteMultiplicity, BoundaryEnvelopeStable) {
  // err(m) * m should neither blow up nor collapse: the boundary term is O(1/m).
  Filtration f = SaturatedFiltration{v0_region()};
  const double e = to_double(multiplicity(f));
  std::vector<double> k;
  for (long long m : {20LL, 40LL, 80LL}) k.push_back(std::abs(to_double(brute_multiplicity(f, {m}).front()) - e) * m);
  for (double x : k) {
    EXPECT_GE(x, 0.5 * k[0]);
    EXPECT_LE(x, 1.5 * k[0]);
  }
}

TEST(Tabulated, Basics) {
  auto f = Tabulated1D::make({0, q("1/2"), q("3/2")}, q("3/4"));
  EXPECT_EQ(f.theta(5), q("15/4"));
  EXPECT_EQ(*ord(f, IntVec{2}), q("3/2"));
  EXPECT_FALSE(ord(f, IntVec{0}).has_value());
  EXPECT_EQ(multiplicity(f), q("4/3"));
  EXPECT_EQ(evaluate(f, qv({"2"})), q("8/3"));
  EXPECT_EQ(level_colength(f, 2), 3);
  EXPECT_ERROR_KIND(Tabulated1D::make({1}, 1), ErrorKind::ValidationError);
  EXPECT_ERROR_KIND(Tabulated1D::make({0, 2, 1}, 1), ErrorKind::ValidationError);
  // theta_2 < 2 theta_1 breaks multiplicativity.
  EXPECT_ERROR_KIND(Tabulated1D::make({0, 1, q("3/2")}, q("3/4")), ErrorKind::ValidationError);
  EXPECT_ERROR_KIND(Tabulated1D::make({0}, 0), ErrorKind::ValidationError);
  auto lim = brute_multiplicity(f, {3000}).front();
  EXPECT_LE(abs(lim - q("4/3")), q("1/100"));
}

TEST(Jumping, CounterexampleShape) {
  auto j = jumping_counterexample(4);
  ASSERT_EQ(j.per_k.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(j.per_k[k], 1);
    EXPECT_LE(abs(j.per_k_brute[k] - 1), q("1/100"));
  }
  EXPECT_EQ(j.limit, 2);
  EXPECT_LE(abs(j.limit_brute - 2), q("1/100"));
  EXPECT_TRUE(j.weak_to_limit);
  EXPECT_FALSE(j.plus_to_limit);
  // The terms decrease to the limit, so orders decrease too.
  auto lim = jumping_limit();
  for (int k = 1; k <= 4; ++k) {
    auto t = jumping_term(k);
    for (long long i = 0; i < 40; ++i) EXPECT_GE(t.theta(i), lim.theta(i));
    EXPECT_EQ(meet(t, lim).tail, lim.tail);
  }
}

TEST(Fixtures, ReproducibleAndValid) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomFixtureSpec spec{seed, 2, 1, 4, 6};
    EXPECT_EQ(random_region(spec), random_region(spec));
    EXPECT_EQ(random_ideal(spec), random_ideal(spec));
    EXPECT_TRUE(is_m_primary(random_ideal(spec)));
    auto p = random_region(spec);
    for (const auto& h : p.halfspaces()) EXPECT_EQ(membership(p.cone(), h.normal), Membership::Interior);
    RandomFixtureSpec r3{seed, 3, 1, 3, 4};
    EXPECT_EQ(random_region(r3).cone().rank(), 3);
  }
  EXPECT_NE(random_region({1}), random_region({2}));
}

TEST(Shoelace, Goldens) {
  EXPECT_EQ(shoelace_covolume_2d(smooth_region({{"1", "1", "1"}})), q("1/2"));
  EXPECT_EQ(shoelace_covolume_2d(v0_region()), 1);
  EXPECT_EQ(shoelace_covolume_2d(meet(v0_region(), v1_region())), q("4/3"));
}

TEST(Sampling, DinfAndLctBounds) {
  SaturatedFiltration f{v0_region()}, g{v1_region()};
  EXPECT_EQ(sampled_dinf(f, g, 10), q("1/2"));
  auto s = ToricSingularity::make(Cone::orthant(2));
  auto a = saturate(Filtration(AdicFiltration::make(MonomialIdeal::make(Cone::orthant(2), {{2, 0}, {0, 10}}), 1)));
  const Rational sl = sampled_lct(s, a, 10000, 3);
  EXPECT_GE(sl, q("3/5"));
  EXPECT_LE(sl - q("3/5"), q("1/1000"));
  EXPECT_EQ(sampled_lct(s, a, 500, 7), sampled_lct(s, a, 500, 7));
}

TEST(GeodesicLattice, RichardsonBeatsNaive) {
  auto g = Geodesic::make({v0_region()}, {v1_region()});
  const double exact = 16.0 / 9.0;
  const double naive = std::abs(to_double(geodesic_lattice_estimate(g, q("1/2"), 200)) - exact);
  const double rich = std::abs(to_double(geodesic_richardson_estimate(g, q("1/2"), 200)) - exact);
  EXPECT_LE(rich, naive);
  EXPECT_LE(rich, 1e-2);
}
