#pragma once

#include <utility>
#include <vector>

#include "toricfil/filtration.hpp"
#include "toricfil/quadrature.hpp"

namespace toricfil {

// Segment between two saturated filtrations. On monomials the interior
// points have order (1-t) tau_0 + t tau_1, a minimum of linear forms, so
// every point of the segment is again a saturated polyhedral filtration.
class Geodesic {
 public:
  static Geodesic make(const SaturatedFiltration& f0, const SaturatedFiltration& f1);
  const SaturatedFiltration& start() const { return f0_; }
  const SaturatedFiltration& end() const { return f1_; }
  const Cone& cone() const { return f0_.region.cone(); }
  // Least integer D > 1 with D P0 inside P1 and D P1 inside P0.
  long long d() const { return d_; }

 private:
  SaturatedFiltration f0_, f1_;
  long long d_ = 2;
};

Rational geodesic_cogauge(const Geodesic& g, const Rational& t, const IntVec& m);
std::vector<Vec> geodesic_forms(const Geodesic& g, const Rational& t);
CoboundedRegion geodesic_region(const Geodesic& g, const Rational& t);
SaturatedFiltration geodesic_point(const Geodesic& g, const Rational& t);
MonomialIdeal geodesic_ideal_at(const Geodesic& g, const Rational& t, const Rational& lambda);
Interval geodesic_multiplicity(const Geodesic& g, const Rational& t, const Rational& tol,
                               std::size_t max_cells = 1000000);
Rational geodesic_multiplicity_exact(const Geodesic& g, const Rational& t);
// Harmonic interpolation v0 v1 / (t v0 + (1-t) v1) of the endpoint slopes at u.
Rational harmonic_slope(const Geodesic& g, const Rational& t, const Vec& u);

struct AdditivityTerm {
  Rational t, t2;
  Rational exact_defect;  // d1(F_t0, F_t2) - d1(F_t0, F_t) - d1(F_t, F_t2) with t0 = 0
  Interval numeric_defect;
};
struct AdditivityReport {
  std::vector<AdditivityTerm> terms;
  Rational tol;
  bool pass = false;
};
// For each pair (t, t2) with t < t2, compares d1(F0, F_t2) with
// d1(F0, F_t) + d1(F_t, F_t2), exactly and through certified intervals.
AdditivityReport geodesic_additivity_check(const Geodesic& g, const std::vector<std::pair<Rational, Rational>>& ts,
                                           const Rational& tol);

struct LipschitzReport {
  Rational lhs, constant, rhs;
  bool pass = false;
};
Rational geodesic_lipschitz_constant(const Geodesic& g);
LipschitzReport geodesic_lipschitz_check(const Geodesic& g, const Rational& t1, const Rational& t2);

// U(x, y) = e(a_{x.,0} cap a_{y.,1}) = n! covol(x P0 cap y P1), x, y >= 0.
Rational dh_union_mass(const Geodesic& g, const Rational& x, const Rational& y);
struct Rect {
  Rational a, b, alpha, beta;  // [a, a + alpha] x [b, b + beta]
};
Rational dh_rectangle_mass(const Geodesic& g, const Rect& r);
// n^2 (a+1)^(n-1) (b+1)^(n-1) e(F0 cap F1), the density bound near (a, b).
Rational dh_mass_bound(const Geodesic& g, const Rational& a, const Rational& b);

struct DHGrid {
  Rational step;
  std::size_t count = 0;
  std::vector<std::vector<Rational>> values;  // values[i][j] = U(i step, j step), i, j <= count
  Rational rectangle(std::size_t i, std::size_t j) const;
};
DHGrid dh_grid(const Geodesic& g, const Rational& step, std::size_t count);
DHGrid dh_grid_serial(const Geodesic& g, const Rational& step, std::size_t count);

}  // namespace toricfil
