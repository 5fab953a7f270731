// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "toricfil/error.hpp"
#include "toricfil/geodesic.hpp"
#include "toricfil/metrics.hpp"
#include "toricfil/oracles.hpp"
#include "toricfil/toric.hpp"

using namespace toricfil;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational q(const char* s) { return parse_rational(s); }
Vec qv(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

const Cone& smooth() {
  static const Cone c = Cone::orthant(2);
  return c;
}
SaturatedFiltration weighted(const Rational& a, const Rational& b) {
  return {CoboundedRegion::make(smooth(), {Halfspace::make({a, b}, 1)})};
}
SaturatedFiltration meet_sat(const SaturatedFiltration& a, const SaturatedFiltration& b) {
  return std::get<SaturatedFiltration>(meet_filtrations(a, b));
}
SaturatedFiltration scale_sat(const SaturatedFiltration& f, const Rational& c) {
  return {scale_region(f.region, c)};
}
MonomialIdeal ideal(std::vector<IntVec> g) { return MonomialIdeal::make(smooth(), std::move(g)); }
SaturatedFiltration rnd(std::uint64_t seed) { return {random_region({seed, 2, 1, 3, 5})}; }

double rel(const Rational& brute, const Rational& exact) {
  return std::abs(to_double(brute - exact)) / std::abs(to_double(exact));
}

void criterion1(Check& c) {
  // Oracle pass first: lattice counts at m = 60 must land within 10%.
  bool oracle_ok = true;
  auto brute60 = [](const SaturatedFiltration& f) { return brute_multiplicity(Filtration(f), {60}).front(); };
  for (int l = 1; l <= 10; ++l) {
    const auto f0 = weighted(1, frac(1, l)), f1 = weighted(frac(1, l), 1);
    const Rational b0 = brute60(f0), b1 = brute60(f1), bm = brute60(meet_sat(f0, f1));
    const Rational bd1 = 2 * bm - b0 - b1;
    const Rational e0 = multiplicity(Filtration(f0)), em = multiplicity(Filtration(meet_sat(f0, f1)));
    oracle_ok = oracle_ok && rel(b0, e0) <= 0.1 && rel(bm, em) <= 0.1;
    const Rational exact_d1 = d1_family_closed_form(l);
    if (exact_d1 != 0)
      oracle_ok = oracle_ok && rel(bd1, exact_d1) <= 0.1;
    else
      oracle_ok = oracle_ok && bd1 == 0;
  }
  c.require(oracle_ok, "colength oracle at m = 60 outside 10%");
  if (!oracle_ok) return;
  c.notes << "oracle ok; ";

  const auto t0 = Clock::now();
  const auto v0 = weighted(1, q("1/2")), v1 = weighted(q("1/2"), 1);
  c.require(multiplicity(Filtration(v0)) == 2 && multiplicity(Filtration(v1)) == 2, "e(v0), e(v1) != 2");
  c.require(multiplicity(Filtration(meet_sat(v0, v1))) == q("8/3"), "e(meet) != 8/3");
  c.require(d1(v0, v1) == q("4/3"), "d1 != 4/3");
  for (int l = 1; l <= 10; ++l) {
    c.require(d1_family_weighted(l) == frac(2 * l * l - 2 * l, l + 1), "family value mismatch");
  }
  const double s = seconds_since(t0);
  c.require(s < 1.0, "exact goldens slower than 1 s");
  c.notes << "e=2,2 e(meet)=8/3 d1=4/3 family l=1..10 exact in " << s << " s";
}

void criterion2(Check& c) {
  auto gens = [](const MonomialIdeal& a) { return a.generators(); };
  c.require(gens(integral_closure(ideal({{2, 0}, {0, 10}}))) == std::vector<IntVec>{{2, 0}, {1, 5}, {0, 10}},
            "closure(x^2,y^10)");
  c.require(gens(integral_closure(ideal({{10, 0}, {0, 2}}))) == std::vector<IntVec>{{10, 0}, {5, 1}, {0, 2}},
            "closure(x^10,y^2)");
  c.require(gens(integral_closure(ideal({{2, 2}, {10, 0}, {0, 10}}))) ==
                std::vector<IntVec>{{10, 0}, {6, 1}, {2, 2}, {1, 6}, {0, 10}},
            "closure(x^2y^2,x^10,y^10)");
  auto a = ideal({{2, 0}, {0, 10}}), b = ideal({{10, 0}, {0, 2}});
  const IntVec x5y{5, 1};
  c.require(intersect_ideals(integral_closure(a), integral_closure(b)).contains(x5y) &&
                !integral_closure(intersect_ideals(a, b)).contains(x5y),
            "x^5y witness");
  auto a1 = ideal({{1, 0}, {0, 2}}), b1 = ideal({{2, 0}, {0, 1}});
  const IntVec x2y{2, 1};
  c.require(intersect_ideals(power(a1, 2), power(b1, 2)).contains(x2y) &&
                !power(intersect_ideals(a1, b1), 2).contains(x2y),
            "x^2y witness");
  c.notes << "three closures byte-exact, two witnesses";
}

void criterion3(Check& c) {
  long long violations = 0;
  const int triples = 500;
  for (int i = 0; i < triples; ++i) {
    const std::uint64_t s = 7000 + 3 * static_cast<std::uint64_t>(i);
    auto f = rnd(s), g = rnd(s + 1), h = rnd(s + 2);
    const Rational fg = d1(f, g), gh = d1(g, h), fh = d1(f, h);
    violations += fg != d1(g, f);
    violations += fh > fg + gh;
    violations += (fg == 0) != (f.region == g.region);
    violations += d1(meet_sat(f, g), meet_sat(f, h)) > gh;
    const Rational dfg = dinf(f, g).value, dgh = dinf(g, h).value, dfh = dinf(f, h).value;
    violations += dfh > dfg + dgh;
    violations += !d1_dinf_bound(f, g).holds;
  }
  c.require(violations == 0, std::to_string(violations) + " violations");
  c.notes << triples << " triples, " << violations << " violations";
}

void criterion4(Check& c) {
  long long absorption = 0, support = 0, distributive = 0, one_sided = 0;
  const int triples = 500;
  auto J = [](const SaturatedFiltration& a, const SaturatedFiltration& b) { return saturated_join(a, b); };
  for (int i = 0; i < triples; ++i) {
    const std::uint64_t s = 20000 + 3 * static_cast<std::uint64_t>(i);
    auto f = rnd(s), g = rnd(s + 1), h = rnd(s + 2);
    absorption += meet_sat(f, J(f, g)) != f;
    absorption += J(f, meet_sat(f, g)) != f;
    const auto lhs = J(f, meet_sat(g, h)), rhs = meet_sat(J(f, g), J(f, h));
    distributive += lhs != rhs;
    one_sided += !is_contained(lhs, rhs);
    const auto j = J(f, g);
    std::vector<IntVec> normals;
    for (const CoboundedRegion* p : std::initializer_list<const CoboundedRegion*>{&f.region, &g.region, &j.region})
      for (const auto& hs : p->halfspaces()) normals.push_back(hs.normal);
    for (const auto& u : normals)
      support += support_value(j.region, u) != std::min(support_value(f.region, u), support_value(g.region, u));
  }
  c.require(absorption == 0, "absorption violated; ");
  c.require(support == 0, "join support identity violated; ");
  c.require(distributive == 0, "distributive law violated; ");
  // Smallest known counterexample, checked on a single monomial.
  const SaturatedFiltration a = scale_sat(weighted(1, 1), 2), b = weighted(frac(1, 3), 1), d = weighted(1, frac(1, 3));
  const auto lhs = J(a, meet_sat(b, d));
  const auto rhs = meet_sat(J(a, b), J(a, d));
  if (ideal_at(rhs, q("3/2")).contains(IntVec{1, 1}) && !ideal_at(lhs, q("3/2")).contains(IntVec{1, 1}))
    c.notes << "counterexample A={x+y>=2} B={x+3y>=3} C={3x+y>=3}: xy in (AvB ^ AvC) at level 3/2, not in Av(B^C); ";
  c.notes << triples << " triples: absorption " << absorption << ", support identity " << support
          << ", distributivity " << distributive << " violations (inclusion J(F,M(G,H)) <= M(J(F,G),J(F,H)) fails "
          << one_sided << " times)";
}

void criterion5(Check& c) {
  const auto t0 = Clock::now();
  auto r1 = Cone::orthant(1);
  auto rank1 = [&](const Rational& a, const Rational& b) {
    return Geodesic::make({CoboundedRegion::make(r1, {Halfspace::make({Rational(1)}, a)})},
                          {CoboundedRegion::make(r1, {Halfspace::make({Rational(1)}, b)})});
  };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> d(1, 9);
  int rank1_ok = 0;
  for (int i = 0; i < 20; ++i) {
    const Rational a = frac(d(rng), d(rng)), b = frac(d(rng), d(rng)), t = frac(d(rng) - 1, 8);
    const auto g = rank1(a, b);
    const Rational ct = a * b / (t * a + (1 - t) * b);
    rank1_ok += harmonic_slope(g, t, {Rational(1)}) == ct && geodesic_multiplicity_exact(g, t) == ct;
  }
  c.require(rank1_ok == 20, "rank-1 closed form");

  const auto g = Geodesic::make(weighted(1, q("1/2")), weighted(q("1/2"), 1));
  const Rational tol = q("1/1000000");
  auto rep = geodesic_additivity_check(g, {{q("1/4"), 1}, {q("1/2"), 1}, {q("3/4"), 1}}, tol);
  Rational worst = 0;
  for (const auto& term : rep.terms) {
    c.require(term.numeric_defect.width() <= 4 * tol, "interval width");
    worst = std::max(worst, Rational(std::max(abs(term.numeric_defect.lo), abs(term.numeric_defect.hi))));
  }
  c.require(rep.pass && worst <= q("1/100000"), "additivity defect above 1e-5");
  for (const char* ts : {"1/4", "1/2", "3/4"})
    c.require(geodesic_multiplicity(g, q(ts), tol).width() <= tol, "multiplicity interval width above 1e-6");

  long long lip_fail = 0, lip_pairs = 0;
  std::vector<Geodesic> gs{g};
  for (std::uint64_t s = 0; s < 6; ++s)
    gs.push_back(Geodesic::make({random_region({s, 2, 1, 3, 4})}, {random_region({s + 4242, 2, 1, 3, 4})}));
  for (const auto& geo : gs)
    for (int i = 0; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        lip_fail += !geodesic_lipschitz_check(geo, frac(i, 4), frac(j, 4)).pass;
        ++lip_pairs;
      }
  c.require(lip_fail == 0, "Lipschitz bound violated");
  const double s = seconds_since(t0);
  c.require(s <= 60.0, "slower than 60 s");
  c.notes << "rank-1 20/20; max |defect| <= " << to_double(worst) << "; Lipschitz " << lip_pairs - lip_fail << "/"
          << lip_pairs << "; " << s << " s";
}

void criterion6(Check& c) {
  const auto limit = canonical_filtration(smooth());
  Rational prev = -1;
  bool monotone = true;
  for (int k = 1; k <= 50; ++k) {
    const Rational s = 1 + frac(1, k);
    const SaturatedFiltration fk{CoboundedRegion::make(smooth(), {Halfspace::make(qv({"1", "1"}), s)})};
    const Rational v = d1(fk, limit);
    c.require(v == s * s - 1, "d1(F_k, F_inf) != (1+1/k)^2 - 1");
    if (prev >= 0) monotone = monotone && v < prev;
    prev = v;
  }
  c.require(monotone, "d1 not decreasing");
  auto j = jumping_counterexample(3);
  bool ones = true;
  for (const auto& e : j.per_k) ones = ones && e == 1;
  c.require(ones && j.limit == 2, "jumping counterexample values");
  c.notes << "d1(F_50, F_inf) = " << to_string(prev) << "; per-k e = 1, limit e = 2";
}

void criterion7(Check& c) {
  const auto s = ToricSingularity::make(smooth());
  const auto f = saturate(Filtration(AdicFiltration::make(ideal({{2, 0}, {0, 10}}), 1)));
  const auto r = lct(s, f);
  c.require(r.value == q("3/5") && r.witness == IntVec{5, 1}, "lct or witness");
  c.require(cogauge(f.region, IntVec{1, 1}) == q("3/5"), "all-ones co-gauge");
  const Rational sampled = sampled_lct(s, f, 10000, 2024);
  c.require(sampled >= q("3/5") && sampled - q("3/5") <= q("1/1000"), "dense sampling");

  std::vector<SaturatedFiltration> seq;
  for (int k = 1; k <= 40; ++k)
    seq.push_back({CoboundedRegion::make(smooth(), {Halfspace::make(qv({"1", "1"}), 1 + frac(1, k))})});
  const auto limit = canonical_filtration(smooth());
  auto h = lct_semicontinuity_harness(s, seq, limit, SemicontinuityMode::PlusUpper, {{1, 1}},
                                      {qv({"1", "1"}), qv({"2", "1"})}, q("1/10"));
  bool values = true;
  for (int k = 1; k <= 40; ++k) values = values && h.lcts[k - 1] == 2 / (1 + frac(1, k));
  c.require(h.pass && values && h.limit_lct == 2, "semicontinuity harness");

  int lip_ok = 0, applicable = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SaturatedFiltration a = rnd(900 + seed);
    std::vector<Halfspace> hs;
    for (const auto& hh : a.region.halfspaces())
      hs.push_back({hh.normal, hh.bound * (1 + frac(1, 200 + static_cast<long long>(seed)))});
    const SaturatedFiltration b{CoboundedRegion::make(smooth(), hs)};
    auto rep = lct_lipschitz_check(s, a, b, q("1/20"));
    const bool delta_ok = rep.delta == std::min(Rational(rep.c / 2), Rational(rep.c * rep.eps / rep.a));
    lip_ok += rep.pass && delta_ok;
    applicable += rep.applicable;
  }
  c.require(lip_ok == 50, "Lipschitz check");
  c.notes << "lct 3/5 at (5,1); sampled " << to_double(sampled) << "; harness pass; Lipschitz " << lip_ok
          << "/50 (" << applicable << " within delta)";
}

void criterion8(Check& c) {
  const auto g = Geodesic::make(weighted(1, q("1/2")), weighted(q("1/2"), 1));
  c.require(dh_union_mass(g, 1, 1) == q("8/3"), "U(1,1) != 8/3");
  const Rational step = q("1/8");
  const std::size_t n = 32;
  const auto grid = dh_grid(g, step, n);
  long long violations = 0;
  for (std::size_t i = 0; i <= n / 2; ++i)
    for (std::size_t j = 0; j <= n / 2; ++j) violations += grid.values[2 * i][2 * j] != 4 * grid.values[i][j];
  const Rational d = rat(g.d());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational mass = grid.rectangle(i, j);
      const Rational a = step * rat(static_cast<long long>(i)), b = step * rat(static_cast<long long>(j));
      violations += mass < 0;
      violations += mass > dh_mass_bound(g, a, b) * step * step;
      if (b + step < a / d || b > d * (a + step)) violations += mass != 0;
    }
  c.require(violations == 0, std::to_string(violations) + " violations");
  c.notes << "32x32 grid, " << violations << " violations";
}

void criterion9(Check& c) {
  const auto t0 = Clock::now();
  int ok = 0;
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_ideal({3000 + seed, 2, 1, 4, 6});
    const Rational e = multiplicity_ideal(a);
    const auto vals = brute_multiplicity(Filtration(AdicFiltration::make(a, 1)), {10, 40});
    const double err10 = std::abs(to_double(vals[0] - e)), err40 = std::abs(to_double(vals[1] - e));
    worst = std::max(worst, err40 / to_double(e));
    ok += err40 < err10 && err40 <= 0.1 * to_double(e);
  }
  const double s = seconds_since(t0);
  c.require(ok == 20, "convergence");
  c.require(s <= 120.0, "slower than 120 s");
  c.notes << ok << "/20 ideals; worst relative error at m=40 " << worst << "; " << s << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"1 golden values", criterion1},         {"2 integral closure", criterion2},
      {"3 metric axioms", criterion3},         {"4 lattice laws", criterion4},
      {"5 geodesics", criterion5},             {"6 monotone sequences", criterion6},
      {"7 lct", criterion7},                   {"8 DH measure", criterion8},
      {"9 oracle convergence", criterion9}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << name << ": " << c.notes.str() << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
