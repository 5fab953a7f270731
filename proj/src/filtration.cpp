#include "toricfil/filtration.hpp"

#include <algorithm>

#include "toricfil/error.hpp"

namespace toricfil {

AdicFiltration AdicFiltration::make(const MonomialIdeal& a, const Rational& speed) {
  if (speed <= 0) throw Error(ErrorKind::NonpositiveScale, "adic speed must be positive");
  if (!is_m_primary(a)) throw Error(ErrorKind::NotMPrimary, "adic filtration needs an m-primary ideal");
  return {a, speed};
}

const Cone& cone_of(const Filtration& f) {
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return s->region.cone();
  return std::get<AdicFiltration>(f).ideal.cone();
}

CoboundedRegion shadow(const Filtration& f) {
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return s->region;
  const auto& a = std::get<AdicFiltration>(f);
  return scale_region(newton_polyhedron(a.ideal), a.speed);
}

SaturatedFiltration saturate(const Filtration& f) { return {shadow(f)}; }

MonomialIdeal ideal_at(const SaturatedFiltration& f, const Rational& lambda) {
  if (lambda <= 0) throw Error(ErrorKind::ValidationError, "level must be positive");
  const auto& p = f.region;
  long long hdeg = 0;
  for (const auto& h : p.cone().hilbert_basis()) hdeg = std::max(hdeg, dot(h, p.cone().interior_weight()));
  Rational bound = lambda * p.max_degree() + rat(hdeg);
  return minimal_elements(
      p.cone(),
      [&](const IntVec& m) {
        for (const auto& h : p.halfspaces())
          if (rat(dot(m, h.normal)) < lambda * h.bound) return false;
        return true;
      },
      bound);
}

MonomialIdeal level_ideal(const Filtration& f, const Rational& lambda) {
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return ideal_at(*s, lambda);
  if (lambda <= 0) throw Error(ErrorKind::ValidationError, "level must be positive");
  const auto& a = std::get<AdicFiltration>(f);
  return power(a.ideal, static_cast<int>(ceil_ll(a.speed * lambda)));
}

std::optional<Rational> ord(const Filtration& f, const IntVec& m) {
  const Cone& cone = cone_of(f);
  if (static_cast<int>(m.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  if (!in_dual(cone, m)) throw Error(ErrorKind::PointOutsideDualCone, "exponent outside the dual cone");
  if (std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; })) return std::nullopt;
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return cogauge(s->region, m);
  const auto& a = std::get<AdicFiltration>(f);
  long long j = 0;
  MonomialIdeal p = a.ideal;
  while (p.contains(m)) {
    ++j;
    p = product(p, a.ideal);
  }
  return rat(j) / a.speed;
}

Rational evaluate(const Filtration& f, const Vec& u) {
  const Cone& cone = cone_of(f);
  if (static_cast<int>(u.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "u length");
  if (membership(cone, u) != Membership::Interior)
    throw Error(ErrorKind::NotInteriorValuation, "u = " + to_string(u) + " not in the interior of sigma");
  return support_value(shadow(f), u);
}

MeetResult meet_filtrations(const Filtration& f, const Filtration& g) {
  require_same_cone(cone_of(f), cone_of(g));
  auto region = meet(shadow(f), shadow(g));
  if (std::holds_alternative<SaturatedFiltration>(f) && std::holds_alternative<SaturatedFiltration>(g))
    return SaturatedFiltration{region};
  return DeferredMeet{f, g, region};
}

SaturatedFiltration saturated_join(const Filtration& f, const Filtration& g) {
  require_same_cone(cone_of(f), cone_of(g));
  return {hull_join(shadow(f), shadow(g))};
}

Rational multiplicity(const Filtration& f) {
  const auto p = shadow(f);
  return factorial(p.cone().rank()) * covolume(p);
}

Rational multiplicity(const DeferredMeet& m) {
  return factorial(m.shadow.cone().rank()) * covolume(m.shadow);
}

Rational multiplicity(const MeetResult& m) {
  if (const auto* s = std::get_if<SaturatedFiltration>(&m)) return multiplicity(Filtration{*s});
  return multiplicity(std::get<DeferredMeet>(m));
}

Filtration scale_filtration(const Filtration& f, const Rational& c) {
  if (c <= 0) throw Error(ErrorKind::NonpositiveScale, "scale must be positive");
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return SaturatedFiltration{scale_region(s->region, c)};
  const auto& a = std::get<AdicFiltration>(f);
  return AdicFiltration{a.ideal, a.speed * c};
}

SaturatedFiltration canonical_filtration(const Cone& cone) {
  std::vector<Vec> pts;
  for (const auto& h : cone.hilbert_basis()) pts.push_back(to_vec(h));
  return {CoboundedRegion::from_points(cone, pts)};
}

std::vector<Rational> jumping_numbers(const SaturatedFiltration& f, const Rational& bound) {
  if (bound <= 0) throw Error(ErrorKind::ValidationError, "bound must be positive");
  const auto& p = f.region;
  std::vector<Rational> out;
  for (const auto& m : lattice_points_below_degree(p.cone(), bound * p.max_degree())) {
    if (std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; })) continue;
    Rational t = cogauge(p, m);
    if (t <= bound) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_contained(const SaturatedFiltration& f, const SaturatedFiltration& g) {
  return is_subset(f.region, g.region);
}

}  // namespace toricfil
