#include "toricfil/quadrature.hpp"

#include <queue>

#include "toricfil/error.hpp"
#include "toricfil/linalg.hpp"
#include "toricfil/region.hpp"

namespace toricfil {

namespace {

struct Cell {
  std::vector<Vec> gens;
  Rational lo, hi;
  std::size_t id;
};

struct WiderFirst {
  bool operator()(const Cell& a, const Cell& b) const {
    Rational ga = a.hi - a.lo, gb = b.hi - b.lo;
    return ga != gb ? ga < gb : a.id > b.id;
  }
};

Rational simplex_measure(const std::vector<Vec>& gens, const std::vector<Rational>& levels) {
  Matrix m;
  for (std::size_t i = 0; i < gens.size(); ++i) m.push_back(scale(gens[i], 1 / levels[i]));
  return abs(det(m));
}

void bracket(Cell& c, const std::vector<Vec>& forms, QuadratureStats* stats) {
  const std::size_t n = c.gens.size();
  std::vector<std::vector<Rational>> val(forms.size(), std::vector<Rational>(n));
  std::vector<Rational> phi(n);
  for (std::size_t k = 0; k < forms.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      val[k][i] = dot(forms[k], c.gens[i]);
      if (k == 0 || val[k][i] < phi[i]) phi[i] = val[k][i];
    }
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (val[k] == phi) {
      c.lo = c.hi = simplex_measure(c.gens, phi);
      if (stats) ++stats->pure_cells;
      return;
    }
  }
  c.hi = simplex_measure(c.gens, phi);
  c.lo = 0;
  for (std::size_t k = 0; k < forms.size(); ++k) c.lo = std::max(c.lo, simplex_measure(c.gens, val[k]));
}

}  // namespace

Interval certified_sublevel_multiplicity(const Cone& cone, const std::vector<Vec>& forms, const Rational& tol,
                                         std::size_t max_cells, QuadratureStats* stats) {
  if (tol <= 0) throw Error(ErrorKind::ValidationError, "tolerance must be positive");
  if (forms.empty()) throw Error(ErrorKind::ValidationError, "no forms");
  const int n = cone.rank();
  // Cross-section of the dual cone at degree 1, triangulated into simplicial cones.
  std::vector<Vec> section;
  for (const auto& r : cone.dual_rays()) section.push_back(scale(to_vec(r), Rational(1) / rat(dot(r, cone.interior_weight()))));
  std::vector<LinearConstraint> cons;
  for (const auto& rho : cone.rays()) cons.push_back({to_vec(rho), Rational(0)});
  std::vector<std::size_t> all(section.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::priority_queue<Cell, std::vector<Cell>, WiderFirst> open;
  std::size_t next_id = 0;
  Rational lo = 0, hi = 0;
  for (const auto& simplex : triangulate_face(section, cons, all, n - 1)) {
    Cell c;
    for (auto i : simplex) c.gens.push_back(section[i]);
    c.id = next_id++;
    bracket(c, forms, stats);
    lo += c.lo;
    hi += c.hi;
    if (c.hi > c.lo) open.push(std::move(c));
  }
  std::size_t cells = next_id;
  while (hi - lo > tol) {
    if (cells >= max_cells) throw Error(ErrorKind::ToleranceTooTight, "cell budget exhausted before reaching tol");
    Cell c = open.top();
    open.pop();
    lo -= c.lo;
    hi -= c.hi;
    // Bisect the longest edge of the cell's cross-section simplex.
    std::size_t bi = 0, bj = 1;
    Rational best = -1;
    for (std::size_t i = 0; i < c.gens.size(); ++i)
      for (std::size_t j = i + 1; j < c.gens.size(); ++j) {
        Vec d = sub(c.gens[i], c.gens[j]);
        Rational len = dot(d, d);
        if (len > best) best = len, bi = i, bj = j;
      }
    Vec midpoint = scale(add(c.gens[bi], c.gens[bj]), Rational(1, 2));
    for (std::size_t side : {bi, bj}) {
      Cell child;
      child.gens = c.gens;
      child.gens[side] = midpoint;
      child.id = next_id++;
      bracket(child, forms, stats);
      lo += child.lo;
      hi += child.hi;
      ++cells;
      if (child.hi > child.lo) open.push(std::move(child));
    }
  }
  if (stats) stats->cells = cells;
  return {lo, hi};
}

}  // namespace toricfil
