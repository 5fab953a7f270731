#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricfil/filtration.hpp"
#include "toricfil/geodesic.hpp"
#include "toricfil/toric.hpp"

// Brute-force counterparts of the exact pipeline. Nothing here calls the
// covolume or quadrature code, so agreement is independent evidence.
namespace toricfil {

// Rank-1 filtration a_lambda = m^g(lambda), stored through the order of each
// monomial, theta_j = ord(x^j). The head lists theta_j for small j and the
// tail is linear: theta_j = tail * j beyond it.
struct Tabulated1D {
  std::vector<Rational> head;
  Rational tail;
  // Checks theta_0 = 0, monotonicity, superadditivity on a sample and tail > 0.
  static Tabulated1D make(std::vector<Rational> head, const Rational& tail);
  Rational theta(long long j) const;
};

std::optional<Rational> ord(const Tabulated1D& f, const IntVec& m);
Rational evaluate(const Tabulated1D& f, const Vec& u);
Rational multiplicity(const Tabulated1D& f);
Tabulated1D meet(const Tabulated1D& f, const Tabulated1D& g);
// l(R / a_lambda) = #{j : theta_j < lambda}.
long long level_colength(const Tabulated1D& f, const Rational& lambda);

// a_{lambda,k} = m^ceil(2 lambda) up to k, m^(2k) on [k, 2k], m^ceil(lambda) after.
Tabulated1D jumping_term(int k);
// The intersection of all terms, m^ceil(2 lambda).
Tabulated1D jumping_limit();

struct JumpingCounterexample {
  std::vector<Rational> per_k;        // exact e of each term
  std::vector<Rational> per_k_brute;  // l(R/a_m)/m at a large level
  Rational limit;
  Rational limit_brute;
  bool weak_to_limit = false;  // ord converges on monomial probes
  bool plus_to_limit = false;  // valuations converge (expected false)
};
JumpingCounterexample jumping_counterexample(int terms = 3);

// n! l(R/a_m) / m^n by direct lattice counting, one value per level m.
std::vector<Rational> brute_multiplicity(const Filtration& f, const std::vector<long long>& levels);
std::vector<Rational> brute_multiplicity(const Tabulated1D& f, const std::vector<long long>& levels);
// Colength of the level ideal a_m, counted point by point.
long long brute_colength(const Filtration& f, long long level);

struct RandomFixtureSpec {
  std::uint64_t seed = 0;
  int rank = 2;
  int min_terms = 1;
  int max_terms = 3;
  long long coord_max = 6;
};
// Deterministic per seed. The region's normals are interior to sigma; the
// ideal contains a power of every dual ray, hence is m-primary.
CoboundedRegion random_region(const RandomFixtureSpec& spec, const Cone& cone);
MonomialIdeal random_ideal(const RandomFixtureSpec& spec, const Cone& cone);
CoboundedRegion random_region(const RandomFixtureSpec& spec);
MonomialIdeal random_ideal(const RandomFixtureSpec& spec);

// Rank 2: vertices from pairwise line intersections, then the shoelace area
// of the bounded complement.
Rational shoelace_covolume_2d(const CoboundedRegion& p);

// Largest |tau_P - tau_Q| / tau_P0 over lattice points of the dual cone with
// coordinates in [-radius, radius]; a lower bound for dinf.
Rational sampled_dinf(const SaturatedFiltration& f, const SaturatedFiltration& g, long long radius);
// Smallest A(v_u) / v_u(F) over random interior weights; an upper bound for lct.
Rational sampled_lct(const ToricSingularity& s, const SaturatedFiltration& f, std::size_t samples,
                     std::uint64_t seed);

// n! #{m in dual cone : tau_t(m) < lambda} / lambda^n.
Rational geodesic_lattice_estimate(const Geodesic& g, const Rational& t, long long lambda);
// 2 E(2 lambda) - E(lambda), which cancels the 1/lambda boundary term.
Rational geodesic_richardson_estimate(const Geodesic& g, const Rational& t, long long lambda);

}  // namespace toricfil
