#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "toricfil/filtration.hpp"
#include "toricfil/geodesic.hpp"
#include "toricfil/toric.hpp"

namespace toricfil::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Vec& v);
Json to_json(const IntVec& v);
Json to_json(const Cone& c);
Json to_json(const CoboundedRegion& p);
Json to_json(const MonomialIdeal& a);
Json to_json(const Filtration& f);
Json to_json(const ToricSingularity& s);
Json to_json(const std::vector<ReesValuation>& rees);

// Parsers raise ParseError on malformed JSON and propagate the domain
// validation errors of the constructors.
Rational rational_from_json(const Json& j);
Cone cone_from_json(const Json& j);
CoboundedRegion region_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j);
Filtration filtration_from_json(const Json& j);
ToricSingularity singularity_from_json(const Json& j);

Json parse_json(const std::string& text);
// Inline JSON when the argument starts with '{', otherwise a file path.
Json load_json(const std::string& path_or_inline);

// JSON schemas of every input type, keyed by type name.
Json schemas();

struct SvgCanvas {
  int width = 400;
  int height = 400;
  int margin = 20;
  long long window = 0;  // lattice window [0, window]^2 in dual coordinates; 0 picks one from the data
};
// Outline of the dual cone and of P clipped to the window.
std::string emit_svg(const CoboundedRegion& p, const SvgCanvas& canvas = {});
// Same, plus lattice dots of the staircase (monomials outside the ideal).
std::string emit_svg(const MonomialIdeal& a, const SvgCanvas& canvas = {});

// x,y,U rows with exact rationals.
std::string dh_grid_csv(const DHGrid& grid);
struct GeodesicProfileRow {
  Rational t;
  Interval e;
};
std::string geodesic_profile_csv(const std::vector<GeodesicProfileRow>& rows);

}  // namespace toricfil::io
