#include "toricfil/ideal.hpp"

#include <algorithm>
#include <optional>

#include "toricfil/error.hpp"

namespace toricfil {

namespace {

bool desc_lex(const IntVec& a, const IntVec& b) { return b < a; }

long long max_hilbert_degree(const Cone& cone) {
  long long best = 0;
  for (const auto& h : cone.hilbert_basis()) best = std::max(best, dot(h, cone.interior_weight()));
  return best;
}

// Least N with N*h in the staircase, or nothing if no power of chi^h lies in a.
std::optional<long long> power_into(const MonomialIdeal& a, const IntVec& h) {
  std::optional<long long> best;
  for (const auto& g : a.generators()) {
    long long need = 0;
    bool ok = true;
    for (const auto& rho : a.cone().rays()) {
      long long hr = dot(h, rho), gr = dot(g, rho);
      if (hr == 0) {
        if (gr != 0) ok = false;
        continue;
      }
      need = std::max(need, (gr + hr - 1) / hr);
    }
    if (ok && (!best || need < *best)) best = need;
  }
  return best;
}

void require_m_primary(const MonomialIdeal& a) {
  if (!is_m_primary(a)) throw Error(ErrorKind::NotMPrimary, "ideal is not m-primary");
}

}  // namespace

std::vector<IntVec> minimalize(const Cone& cone, std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool divisible = false;
    for (std::size_t j = 0; j < gens.size() && !divisible; ++j)
      if (j != i && in_dual(cone, sub(gens[i], gens[j]))) divisible = true;
    if (!divisible) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), desc_lex);
  return out;
}

MonomialIdeal MonomialIdeal::make(const Cone& cone, std::vector<IntVec> generators) {
  if (generators.empty()) throw Error(ErrorKind::ValidationError, "ideal needs a generator");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
    if (!in_dual(cone, g)) throw Error(ErrorKind::PointOutsideDualCone, "exponent " + to_string(g) + " outside");
    if (std::all_of(g.begin(), g.end(), [](long long x) { return x == 0; }))
      throw Error(ErrorKind::ValidationError, "unit ideal is not a proper ideal");
  }
  MonomialIdeal a;
  a.cone_ = cone;
  a.gens_ = minimalize(cone, std::move(generators));
  return a;
}

bool MonomialIdeal::contains(const IntVec& m) const {
  for (const auto& g : gens_)
    if (in_dual(cone_, sub(m, g))) return true;
  return false;
}

bool is_m_primary(const MonomialIdeal& a) {
  for (const auto& h : a.cone().hilbert_basis())
    if (!power_into(a, h)) return false;
  return true;
}

kernels::Box colength_window(const MonomialIdeal& a) {
  require_m_primary(a);
  const int n = a.cone().rank();
  kernels::Box box{IntVec(n, 0), IntVec(n, 0)};
  for (const auto& h : a.cone().hilbert_basis()) {
    long long steps = *power_into(a, h) - 1;
    if (steps <= 0) continue;
    for (int k = 0; k < n; ++k) (h[k] < 0 ? box.lo[k] : box.hi[k]) += steps * h[k];
  }
  return box;
}

long long colength(const MonomialIdeal& a) {
  return kernels::count_outside_staircase_parallel(colength_window(a), a.cone().rays(), a.generators());
}

long long colength_serial(const MonomialIdeal& a) {
  return kernels::count_outside_staircase_serial(colength_window(a), a.cone().rays(), a.generators());
}

CoboundedRegion newton_polyhedron(const MonomialIdeal& a) {
  require_m_primary(a);
  std::vector<Vec> pts;
  for (const auto& g : a.generators()) pts.push_back(to_vec(g));
  return CoboundedRegion::from_points(a.cone(), pts);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_cone(a.cone(), b.cone());
  std::vector<IntVec> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(add(g, h));
  return MonomialIdeal::make(a.cone(), gens);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_cone(a.cone(), b.cone());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::make(a.cone(), gens);
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 1) throw Error(ErrorKind::ValidationError, "power exponent must be positive");
  MonomialIdeal p = a;
  for (int i = 1; i < k; ++i) p = product(p, a);
  return p;
}

kernels::Box degree_box(const Cone& cone, const Rational& bound) {
  const int n = cone.rank();
  const IntVec& u0 = cone.interior_weight();
  IntVec lo(n, 0), hi(n, 0);
  for (const auto& r : cone.dual_rays()) {
    Rational t = bound / rat(dot(r, u0));
    for (int k = 0; k < n; ++k) {
      Rational c = t * rat(r[k]);
      lo[k] = std::min(lo[k], floor_ll(c));
      hi[k] = std::max(hi[k], ceil_ll(c));
    }
  }
  return {lo, hi};
}

std::vector<IntVec> lattice_points_below_degree(const Cone& cone, const Rational& bound) {
  const IntVec& u0 = cone.interior_weight();
  const kernels::Box box = degree_box(cone, bound);
  std::vector<IntVec> out;
  const std::size_t total = box.size();
  for (std::size_t i = 0; i < total; ++i) {
    IntVec m = box.point(i);
    if (in_dual(cone, m) && rat(dot(m, u0)) <= bound) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal minimal_elements(const Cone& cone, const std::function<bool(const IntVec&)>& pred,
                               const Rational& bound) {
  std::vector<IntVec> gens;
  for (const auto& m : lattice_points_below_degree(cone, bound)) {
    if (std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; }) || !pred(m)) continue;
    bool minimal = true;
    for (const auto& h : cone.hilbert_basis()) {
      IntVec d = sub(m, h);
      bool zero = std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; });
      if (!zero && in_dual(cone, d) && pred(d)) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(m);
  }
  return MonomialIdeal::make(cone, gens);
}

MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_cone(a.cone(), b.cone());
  require_m_primary(a);
  require_m_primary(b);
  const Cone& cone = a.cone();
  if (cone.is_smooth_orthant()) {
    std::vector<IntVec> gens;
    for (const auto& g : a.generators())
      for (const auto& h : b.generators()) {
        IntVec m(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) m[k] = std::max(g[k], h[k]);
        gens.push_back(m);
      }
    return MonomialIdeal::make(cone, gens);
  }
  // Minimal elements sit one Hilbert step above the union of the two complements.
  Rational bound = 0;
  for (const auto* ideal : {&a, &b}) {
    auto box = colength_window(*ideal);
    long long corner = 0;
    for (int k = 0; k < cone.rank(); ++k)
      corner += std::max(box.lo[k] * cone.interior_weight()[k], box.hi[k] * cone.interior_weight()[k]);
    bound = std::max(bound, rat(corner));
  }
  bound += rat(max_hilbert_degree(cone));
  return minimal_elements(cone, [&](const IntVec& m) { return a.contains(m) && b.contains(m); }, bound);
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  auto newt = newton_polyhedron(a);
  Rational bound = newt.max_degree() + rat(max_hilbert_degree(a.cone()));
  return minimal_elements(a.cone(), [&](const IntVec& m) { return newt.contains(m); }, bound);
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& a) {
  std::vector<ReesValuation> out;
  const auto newt = newton_polyhedron(a);
  for (const auto& h : newt.halfspaces()) out.push_back({h.normal, h.bound});
  return out;
}

Rational multiplicity_ideal(const MonomialIdeal& a) {
  return factorial(a.cone().rank()) * covolume(newton_polyhedron(a));
}

std::string to_pretty_string(const MonomialIdeal& a) {
  std::string s = "(";
  bool first = true;
  for (const auto& g : a.generators()) {
    if (!first) s += ", ";
    first = false;
    if (a.cone().is_smooth_orthant() && a.cone().rank() == 2) {
      std::string term;
      const char* names[2] = {"x", "y"};
      for (int k = 0; k < 2; ++k) {
        if (g[k] == 0) continue;
        if (!term.empty()) term += " ";
        term += names[k];
        if (g[k] != 1) term += "^" + std::to_string(g[k]);
      }
      s += term;
    } else {
      s += to_string(g);
    }
  }
  return s + ")";
}

}  // namespace toricfil
