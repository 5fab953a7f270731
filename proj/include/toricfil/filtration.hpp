#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "toricfil/ideal.hpp"
#include "toricfil/region.hpp"

namespace toricfil {

// Saturated monomial filtration, a_lambda = {m : tau_P(m) >= lambda}.
struct SaturatedFiltration {
  CoboundedRegion region;
  bool operator==(const SaturatedFiltration& o) const { return region == o.region; }
  bool operator!=(const SaturatedFiltration& o) const { return !(*this == o); }
};

// a_lambda = a^ceil(speed * lambda).
struct AdicFiltration {
  MonomialIdeal ideal;
  Rational speed;
  static AdicFiltration make(const MonomialIdeal& a, const Rational& speed);
  bool operator==(const AdicFiltration& o) const { return ideal == o.ideal && speed == o.speed; }
};

using Filtration = std::variant<SaturatedFiltration, AdicFiltration>;

// Termwise meet of filtrations that are not both saturated. Metric code uses
// the polyhedral shadow.
struct DeferredMeet {
  Filtration left, right;
  CoboundedRegion shadow;
};
using MeetResult = std::variant<SaturatedFiltration, DeferredMeet>;

const Cone& cone_of(const Filtration& f);
CoboundedRegion shadow(const Filtration& f);
SaturatedFiltration saturate(const Filtration& f);

MonomialIdeal ideal_at(const SaturatedFiltration& f, const Rational& lambda);
// a_lambda for either variant.
MonomialIdeal level_ideal(const Filtration& f, const Rational& lambda);
// ord(chi^m); std::nullopt encodes +infinity at m = 0.
std::optional<Rational> ord(const Filtration& f, const IntVec& m);
Rational evaluate(const Filtration& f, const Vec& u);

MeetResult meet_filtrations(const Filtration& f, const Filtration& g);
SaturatedFiltration saturated_join(const Filtration& f, const Filtration& g);

Rational multiplicity(const Filtration& f);
Rational multiplicity(const DeferredMeet& m);
Rational multiplicity(const MeetResult& m);
Filtration scale_filtration(const Filtration& f, const Rational& c);
SaturatedFiltration canonical_filtration(const Cone& cone);
std::vector<Rational> jumping_numbers(const SaturatedFiltration& f, const Rational& bound);
// f is contained in g termwise; for saturated data this is P_f within P_g.
bool is_contained(const SaturatedFiltration& f, const SaturatedFiltration& g);

}  // namespace toricfil
