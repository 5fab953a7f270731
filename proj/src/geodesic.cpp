#include "toricfil/geodesic.hpp"

#include <algorithm>
#include <exception>

#include "toricfil/error.hpp"
#include "toricfil/metrics.hpp"

namespace toricfil {

namespace {

void check_t(const Rational& t) {
  if (t < 0 || t > 1) throw Error(ErrorKind::OutOfRangeT, "t = " + to_string(t) + " outside [0,1]");
}

Rational pow_n(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

std::vector<Vec> join_forms(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Interval exact_interval(const Rational& x) { return {x, x}; }

}  // namespace

Geodesic Geodesic::make(const SaturatedFiltration& f0, const SaturatedFiltration& f1) {
  require_same_cone(f0.region.cone(), f1.region.cone());
  Geodesic g;
  g.f0_ = f0;
  g.f1_ = f1;
  g.d_ = std::max(least_integer_scale(f0.region, f1.region), least_integer_scale(f1.region, f0.region));
  return g;
}

Rational geodesic_cogauge(const Geodesic& g, const Rational& t, const IntVec& m) {
  check_t(t);
  return (1 - t) * cogauge(g.start().region, m) + t * cogauge(g.end().region, m);
}

std::vector<Vec> geodesic_forms(const Geodesic& g, const Rational& t) {
  check_t(t);
  const auto a = cogauge_forms(g.start().region);
  const auto b = cogauge_forms(g.end().region);
  if (t == 0) return a;
  if (t == 1) return b;
  std::vector<Vec> out;
  for (const auto& fa : a)
    for (const auto& fb : b) out.push_back(add(scale(fa, 1 - t), scale(fb, t)));
  return out;
}

CoboundedRegion geodesic_region(const Geodesic& g, const Rational& t) {
  check_t(t);
  if (t == 0) return g.start().region;
  if (t == 1) return g.end().region;
  std::vector<Halfspace> hs;
  for (const auto& f : geodesic_forms(g, t)) hs.push_back(Halfspace::make(f, 1));
  return CoboundedRegion::make(g.cone(), hs);
}

SaturatedFiltration geodesic_point(const Geodesic& g, const Rational& t) { return {geodesic_region(g, t)}; }

MonomialIdeal geodesic_ideal_at(const Geodesic& g, const Rational& t, const Rational& lambda) {
  check_t(t);
  if (lambda <= 0) throw Error(ErrorKind::ValidationError, "level must be positive");
  // Below a minimal generator, tau_t < lambda forces min(tau_0, tau_1) < lambda,
  // so generators sit within one Hilbert step of the union of the complements.
  const Cone& cone = g.cone();
  long long hdeg = 0;
  for (const auto& h : cone.hilbert_basis()) hdeg = std::max(hdeg, dot(h, cone.interior_weight()));
  Rational bound = lambda * std::max(g.start().region.max_degree(), g.end().region.max_degree()) + rat(hdeg);
  return minimal_elements(cone, [&](const IntVec& m) { return geodesic_cogauge(g, t, m) >= lambda; }, bound);
}

Interval geodesic_multiplicity(const Geodesic& g, const Rational& t, const Rational& tol, std::size_t max_cells) {
  check_t(t);
  if (t == 0) return exact_interval(multiplicity(Filtration{g.start()}));
  if (t == 1) return exact_interval(multiplicity(Filtration{g.end()}));
  return certified_sublevel_multiplicity(g.cone(), geodesic_forms(g, t), tol, max_cells);
}

Rational geodesic_multiplicity_exact(const Geodesic& g, const Rational& t) {
  return multiplicity(Filtration{geodesic_point(g, t)});
}

Rational harmonic_slope(const Geodesic& g, const Rational& t, const Vec& u) {
  check_t(t);
  Rational v0 = support_value(g.start().region, u), v1 = support_value(g.end().region, u);
  return v0 * v1 / (t * v0 + (1 - t) * v1);
}

AdditivityReport geodesic_additivity_check(const Geodesic& g, const std::vector<std::pair<Rational, Rational>>& ts,
                                           const Rational& tol) {
  AdditivityReport rep;
  rep.tol = tol;
  rep.pass = true;
  const Cone& cone = g.cone();
  auto meet_e = [&](const Rational& a, const Rational& b) {
    if (a == b && (a == 0 || a == 1)) return geodesic_multiplicity(g, a, tol);
    return certified_sublevel_multiplicity(cone, join_forms(geodesic_forms(g, a), geodesic_forms(g, b)), tol);
  };
  for (const auto& [t, t2] : ts) {
    if (!(t < t2)) throw Error(ErrorKind::ValidationError, "additivity pairs need t < t2");
    AdditivityTerm term{t, t2, 0, {}};
    const auto f0 = Filtration{g.start()};
    const auto ft = Filtration{geodesic_point(g, t)};
    const auto ft2 = Filtration{geodesic_point(g, t2)};
    term.exact_defect = d1(f0, ft2) - d1(f0, ft) - d1(ft, ft2);
    // Expanding the three distances, e(F0) and e(F_t2) cancel:
    // defect = 2 e(0 ^ t2) - 2 e(0 ^ t) - 2 e(t ^ t2) + 2 e(t).
    Interval e_0t2 = meet_e(0, t2), e_0t = meet_e(0, t), e_tt2 = meet_e(t, t2);
    Interval e_t = geodesic_multiplicity(g, t, tol);
    term.numeric_defect.lo = 2 * (e_0t2.lo - e_0t.hi - e_tt2.hi + e_t.lo);
    term.numeric_defect.hi = 2 * (e_0t2.hi - e_0t.lo - e_tt2.lo + e_t.hi);
    if (abs(term.numeric_defect.mid()) > 4 * tol || !term.numeric_defect.contains(term.exact_defect) ||
        term.exact_defect != 0)
      rep.pass = false;
    rep.terms.push_back(std::move(term));
  }
  return rep;
}

Rational geodesic_lipschitz_constant(const Geodesic& g) {
  const int n = g.cone().rank();
  const Rational d(static_cast<long>(g.d()));
  const Rational e = multiplicity(meet_filtrations(g.start(), g.end()));
  return Rational(n * n) * pow_n(2, n + 1) * pow_n(d + 1, n - 1) * d * (d - 1) * e;
}

LipschitzReport geodesic_lipschitz_check(const Geodesic& g, const Rational& t1, const Rational& t2) {
  check_t(t1);
  check_t(t2);
  if (t1 > t2) throw Error(ErrorKind::ValidationError, "need t1 <= t2");
  LipschitzReport rep;
  rep.lhs = d1(geodesic_point(g, t1), geodesic_point(g, t2));
  rep.constant = geodesic_lipschitz_constant(g);
  rep.rhs = rep.constant * (t2 - t1);
  rep.pass = rep.lhs <= rep.rhs;
  return rep;
}

Rational dh_union_mass(const Geodesic& g, const Rational& x, const Rational& y) {
  if (x < 0 || y < 0) throw Error(ErrorKind::ValidationError, "DH coordinates must be nonnegative");
  const int n = g.cone().rank();
  if (x == 0 && y == 0) return 0;
  if (x == 0) return pow_n(y, n) * multiplicity(Filtration{g.end()});
  if (y == 0) return pow_n(x, n) * multiplicity(Filtration{g.start()});
  auto region = meet(scale_region(g.start().region, x), scale_region(g.end().region, y));
  return factorial(n) * covolume(region);
}

Rational dh_rectangle_mass(const Geodesic& g, const Rect& r) {
  const Rational a2 = r.a + r.alpha, b2 = r.b + r.beta;
  return dh_union_mass(g, a2, r.b) + dh_union_mass(g, r.a, b2) - dh_union_mass(g, r.a, r.b) -
         dh_union_mass(g, a2, b2);
}

Rational dh_mass_bound(const Geodesic& g, const Rational& a, const Rational& b) {
  const int n = g.cone().rank();
  const Rational e = multiplicity(meet_filtrations(g.start(), g.end()));
  return Rational(n * n) * pow_n(a + 1, n - 1) * pow_n(b + 1, n - 1) * e;
}

Rational DHGrid::rectangle(std::size_t i, std::size_t j) const {
  return values[i + 1][j] + values[i][j + 1] - values[i][j] - values[i + 1][j + 1];
}

DHGrid dh_grid_serial(const Geodesic& g, const Rational& step, std::size_t count) {
  if (step <= 0) throw Error(ErrorKind::ValidationError, "step must be positive");
  DHGrid grid{step, count, std::vector<std::vector<Rational>>(count + 1, std::vector<Rational>(count + 1))};
  for (std::size_t i = 0; i <= count; ++i)
    for (std::size_t j = 0; j <= count; ++j)
      grid.values[i][j] = dh_union_mass(g, step * static_cast<long>(i), step * static_cast<long>(j));
  return grid;
}

DHGrid dh_grid(const Geodesic& g, const Rational& step, std::size_t count) {
  if (step <= 0) throw Error(ErrorKind::ValidationError, "step must be positive");
  DHGrid grid{step, count, std::vector<std::vector<Rational>>(count + 1, std::vector<Rational>(count + 1))};
  const long long side = static_cast<long long>(count + 1);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < side * side; ++idx) {
    const long i = static_cast<long>(idx / side), j = static_cast<long>(idx % side);
    try {
      grid.values[i][j] = dh_union_mass(g, step * i, step * j);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace toricfil
