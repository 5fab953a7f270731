#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "toricfil/cone.hpp"
#include "toricfil/kernels.hpp"
#include "toricfil/region.hpp"

namespace toricfil {

// Monomial ideal of the semigroup ring, by its minimal generators. Generators
// are kept in decreasing lexicographic order, so x^2 precedes x y^5 precedes y^10.
class MonomialIdeal {
 public:
  static MonomialIdeal make(const Cone& cone, std::vector<IntVec> generators);

  const Cone& cone() const { return cone_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  // Staircase membership of the monomial chi^m.
  bool contains(const IntVec& m) const;

  bool operator==(const MonomialIdeal& o) const { return cone_ == o.cone_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  Cone cone_;
  std::vector<IntVec> gens_;
};

bool is_m_primary(const MonomialIdeal& a);
CoboundedRegion newton_polyhedron(const MonomialIdeal& a);
long long colength(const MonomialIdeal& a);
long long colength_serial(const MonomialIdeal& a);
// Box that contains every lattice point of the dual cone outside the staircase.
kernels::Box colength_window(const MonomialIdeal& a);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal integral_closure(const MonomialIdeal& a);

struct ReesValuation {
  IntVec u;
  Rational value;
  bool operator==(const ReesValuation& o) const { return u == o.u && value == o.value; }
};
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& a);
Rational multiplicity_ideal(const MonomialIdeal& a);

// x^i y^j rendering for the smooth rank-2 case, exponent tuples otherwise.
std::string to_pretty_string(const MonomialIdeal& a);

// Integral box containing {m in dual cone : <m, u0> <= bound}.
kernels::Box degree_box(const Cone& cone, const Rational& bound);
// Lattice points of the dual cone with <m, u0> <= bound, in lexicographic order.
std::vector<IntVec> lattice_points_below_degree(const Cone& cone, const Rational& bound);

// Minimal generators of the up-set {m : pred(m)} of the dual semigroup,
// searched among degrees <= bound (the caller proves the bound is sufficient).
MonomialIdeal minimal_elements(const Cone& cone, const std::function<bool(const IntVec&)>& pred,
                               const Rational& bound);

std::vector<IntVec> minimalize(const Cone& cone, std::vector<IntVec> gens);

}  // namespace toricfil
