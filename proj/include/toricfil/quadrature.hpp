#pragma once

#include <cstddef>
#include <vector>

#include "toricfil/cone.hpp"
#include "toricfil/rational.hpp"

namespace toricfil {

struct Interval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

struct QuadratureStats {
  std::size_t cells = 0;
  std::size_t pure_cells = 0;
};

// Certified enclosure of n! vol{m in dual cone : min_k <m, forms[k]> < 1},
// with forms positive on the dual cone minus 0. Each simplicial cone cell is
// exact when a single form is minimal at all its generators; otherwise it is
// bracketed by the largest single-form simplex (inner) and the simplex of the
// vertex values (outer, by concavity), and the widest cell is bisected.
Interval certified_sublevel_multiplicity(const Cone& cone, const std::vector<Vec>& forms, const Rational& tol,
                                         std::size_t max_cells = 1000000, QuadratureStats* stats = nullptr);

}  // namespace toricfil
