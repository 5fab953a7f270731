#include "toricfil/oracles.hpp"

#include <algorithm>
#include <random>

#include "toricfil/error.hpp"
#include "toricfil/kernels.hpp"
#include "toricfil/metrics.hpp"

namespace toricfil {

Tabulated1D Tabulated1D::make(std::vector<Rational> head, const Rational& tail) {
  if (tail <= 0) throw Error(ErrorKind::ValidationError, "tail slope must be positive");
  Tabulated1D f{std::move(head), tail};
  if (!f.head.empty() && f.head.front() != 0) throw Error(ErrorKind::ValidationError, "theta_0 must be 0");
  const long long span = static_cast<long long>(f.head.size()) + 4;
  for (long long j = 1; j <= span; ++j)
    if (f.theta(j) < f.theta(j - 1)) throw Error(ErrorKind::ValidationError, "theta must be nondecreasing");
  for (long long i = 1; i <= span; ++i)
    for (long long j = i; i + j <= 2 * span; ++j)
      if (f.theta(i + j) < f.theta(i) + f.theta(j))
        throw Error(ErrorKind::ValidationError, "filtration is not multiplicative");
  return f;
}

Rational Tabulated1D::theta(long long j) const {
  if (j < static_cast<long long>(head.size())) return head[j];
  return tail * rat(j);
}

std::optional<Rational> ord(const Tabulated1D& f, const IntVec& m) {
  if (m.size() != 1) throw Error(ErrorKind::DimensionMismatch, "rank-1 monomial expected");
  if (m[0] < 0) throw Error(ErrorKind::PointOutsideDualCone, "negative exponent");
  if (m[0] == 0) return std::nullopt;
  return f.theta(m[0]);
}

// v_u(a_lambda) = u g(lambda) and g(lambda) ~ lambda / tail.
Rational evaluate(const Tabulated1D& f, const Vec& u) {
  if (u.size() != 1 || u[0] <= 0) throw Error(ErrorKind::NotInteriorValuation, "positive rank-1 weight expected");
  return u[0] / f.tail;
}

Rational multiplicity(const Tabulated1D& f) { return 1 / f.tail; }

Tabulated1D meet(const Tabulated1D& f, const Tabulated1D& g) {
  // Tails pass through the origin, so their minimum is the smaller slope.
  const std::size_t len = std::max(f.head.size(), g.head.size());
  std::vector<Rational> head(len);
  for (std::size_t j = 0; j < len; ++j) head[j] = std::min(f.theta(j), g.theta(j));
  return Tabulated1D::make(std::move(head), std::min(f.tail, g.tail));
}

long long level_colength(const Tabulated1D& f, const Rational& lambda) {
  const long long h = static_cast<long long>(f.head.size());
  long long count = 0;
  for (long long j = 0; j < h; ++j)
    if (f.head[j] < lambda) ++count;
  // Tail indices j >= h with tail * j < lambda.
  const long long tail_end = ceil_ll(lambda / f.tail);
  if (tail_end > h) count += tail_end - h;
  return count;
}

Tabulated1D jumping_term(int k) {
  if (k < 1) throw Error(ErrorKind::ValidationError, "k must be positive");
  std::vector<Rational> head(2 * k);
  for (int j = 0; j < 2 * k; ++j) head[j] = frac(j, 2);
  return Tabulated1D::make(std::move(head), 1);
}

Tabulated1D jumping_limit() { return Tabulated1D::make({}, Rational(1, 2)); }

JumpingCounterexample jumping_counterexample(int terms) {
  JumpingCounterexample out;
  std::vector<Tabulated1D> seq;
  const long long level = 1000;
  for (int k = 1; k <= terms; ++k) {
    seq.push_back(jumping_term(k));
    out.per_k.push_back(multiplicity(seq.back()));
    out.per_k_brute.push_back(brute_multiplicity(seq.back(), {level}).front());
  }
  auto limit = jumping_limit();
  // The limit is the pointwise infimum of the orders.
  for (long long j = 0; j < 2 * terms; ++j) {
    Rational inf = seq.front().theta(j);
    for (const auto& f : seq) inf = std::min(inf, f.theta(j));
    if (inf != limit.theta(j)) throw Error(ErrorKind::ValidationError, "limit is not the pointwise infimum");
  }
  out.limit = multiplicity(limit);
  out.limit_brute = brute_multiplicity(limit, {level}).front();
  std::vector<IntVec> probes;
  for (long long j = 1; j < std::max(2, terms); ++j) probes.push_back({j});
  out.weak_to_limit = converges_weakly(seq, limit, probes, Rational(0));
  out.plus_to_limit = converges_plus(seq, limit, std::vector<Vec>{{Rational(1)}}, Rational(1, 10));
  return out;
}

namespace {

Rational pow_q(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// #{m in dual cone : <m, normals[i]> < limits[i] for some i} over the box of
// degree <= bound.
long long count_strictly_below(const Cone& cone, const std::vector<IntVec>& normals,
                               const std::vector<Rational>& limits, const Rational& bound) {
  std::vector<long long> lim;
  for (const auto& l : limits) lim.push_back(ceil_ll(l) - 1);
  return kernels::count_below_any_parallel(degree_box(cone, bound), cone.rays(), normals, lim);
}

}  // namespace

long long brute_colength(const Filtration& f, long long level) {
  if (level < 1) throw Error(ErrorKind::ValidationError, "level must be positive");
  if (const auto* a = std::get_if<AdicFiltration>(&f)) {
    const int k = static_cast<int>(ceil_ll(a->speed * rat(level)));
    return colength_serial(power(a->ideal, k));
  }
  const auto& p = std::get<SaturatedFiltration>(f).region;
  std::vector<IntVec> normals;
  std::vector<Rational> limits;
  for (const auto& h : p.halfspaces()) {
    normals.push_back(h.normal);
    limits.push_back(h.bound * rat(level));
  }
  return count_strictly_below(p.cone(), normals, limits, rat(level) * p.max_degree());
}

std::vector<Rational> brute_multiplicity(const Filtration& f, const std::vector<long long>& levels) {
  const int n = cone_of(f).rank();
  std::vector<Rational> out;
  for (long long m : levels)
    out.push_back(factorial(n) * rat(brute_colength(f, m)) / pow_q(rat(m), n));
  return out;
}

std::vector<Rational> brute_multiplicity(const Tabulated1D& f, const std::vector<long long>& levels) {
  std::vector<Rational> out;
  for (long long m : levels) out.push_back(rat(level_colength(f, rat(m))) / rat(m));
  return out;
}

namespace {

IntVec random_interior_normal(std::mt19937_64& rng, const Cone& cone, long long coord_max) {
  std::uniform_int_distribution<long long> w(1, coord_max);
  IntVec u(cone.rank(), 0);
  for (const auto& r : cone.rays()) {
    const long long c = w(rng);
    for (int k = 0; k < cone.rank(); ++k) u[k] += c * r[k];
  }
  return primitive(u);
}

}  // namespace

CoboundedRegion random_region(const RandomFixtureSpec& spec, const Cone& cone) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> terms(spec.min_terms, spec.max_terms);
  std::uniform_int_distribution<long long> num(1, 4 * spec.coord_max), den(1, 4);
  std::vector<Halfspace> hs;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const IntVec u = random_interior_normal(rng, cone, spec.coord_max);
    const long long p = num(rng), q = den(rng);
    hs.push_back({u, frac(p, q)});
  }
  return CoboundedRegion::make(cone, hs);
}

MonomialIdeal random_ideal(const RandomFixtureSpec& spec, const Cone& cone) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long long> mult(1, spec.coord_max);
  std::uniform_int_distribution<int> terms(spec.min_terms - 1, spec.max_terms - 1);
  std::vector<IntVec> gens;
  for (const auto& r : cone.dual_rays()) {
    const long long c = mult(rng);
    IntVec g(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) g[k] = c * r[k];
    gens.push_back(g);
  }
  const auto box = degree_box(cone, rat(spec.coord_max * cone.rank()));
  const int extra = std::max(0, terms(rng));
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int added = 0, tries = 0; added < extra && tries < 1000; ++tries) {
    IntVec m = box.point(pick(rng));
    if (is_zero(m) || !in_dual(cone, m)) continue;
    gens.push_back(m);
    ++added;
  }
  return MonomialIdeal::make(cone, gens);
}

CoboundedRegion random_region(const RandomFixtureSpec& spec) { return random_region(spec, Cone::orthant(spec.rank)); }
MonomialIdeal random_ideal(const RandomFixtureSpec& spec) { return random_ideal(spec, Cone::orthant(spec.rank)); }

Rational shoelace_covolume_2d(const CoboundedRegion& p) {
  const Cone& cone = p.cone();
  if (cone.rank() != 2) throw Error(ErrorKind::UnsupportedRank, "shoelace oracle is rank 2 only");
  std::vector<LinearConstraint> lines;
  for (const auto& h : p.halfspaces()) lines.push_back({to_vec(h.normal), h.bound});
  for (const auto& r : cone.rays()) lines.push_back({to_vec(r), Rational(0)});
  auto feasible = [&](const Vec& x) {
    for (const auto& l : lines)
      if (dot(x, l.normal) < l.bound) return false;
    return true;
  };
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Vec &a = lines[i].normal, &b = lines[j].normal;
      const Rational d = a[0] * b[1] - a[1] * b[0];
      if (d == 0) continue;
      Vec x{(lines[i].bound * b[1] - lines[j].bound * a[1]) / d, (a[0] * lines[j].bound - b[0] * lines[i].bound) / d};
      if (feasible(x) && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
  // P's boundary chain seen from the origin, ordered by angle.
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0] > 0; });
  Rational area = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) area += pts[i][0] * pts[i + 1][1] - pts[i][1] * pts[i + 1][0];
  return abs(area) / 2;
}

Rational sampled_dinf(const SaturatedFiltration& f, const SaturatedFiltration& g, long long radius) {
  const Cone& cone = f.region.cone();
  const auto p0 = canonical_filtration(cone);
  const int n = cone.rank();
  kernels::Box box{IntVec(n, -radius), IntVec(n, radius)};
  Rational best = 0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    IntVec m = box.point(i);
    if (is_zero(m) || !in_dual(cone, m)) continue;
    Rational v = abs(cogauge(f.region, m) - cogauge(g.region, m)) / cogauge(p0.region, m);
    best = std::max(best, v);
  }
  return best;
}

Rational sampled_lct(const ToricSingularity& s, const SaturatedFiltration& f, std::size_t samples,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> w(1, 1000000);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < samples; ++i) {
    Vec u(s.cone().rank(), Rational(0));
    for (const auto& r : s.cone().rays()) u = add(u, scale(to_vec(r), rat(w(rng))));
    Rational v = log_discrepancy(s, u) / support_value(f.region, u);
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational geodesic_lattice_estimate(const Geodesic& g, const Rational& t, long long lambda) {
  const Cone& cone = g.cone();
  const auto forms = geodesic_forms(g, t);
  Integer den = 1;
  for (const auto& f : forms)
    for (const auto& x : f) den = lcm(den, Integer(x.get_den()));
  const Rational dq(den);
  std::vector<IntVec> normals;
  std::vector<Rational> limits;
  for (const auto& f : forms) {
    normals.push_back(to_intvec(scale(f, dq)));
    limits.push_back(rat(lambda) * dq);
  }
  const Rational bound =
      rat(lambda) * std::max(g.start().region.max_degree(), g.end().region.max_degree());
  const int n = cone.rank();
  return factorial(n) * rat(count_strictly_below(cone, normals, limits, bound)) / pow_q(rat(lambda), n);
}

Rational geodesic_richardson_estimate(const Geodesic& g, const Rational& t, long long lambda) {
  return 2 * geodesic_lattice_estimate(g, t, 2 * lambda) - geodesic_lattice_estimate(g, t, lambda);
}

}  // namespace toricfil
