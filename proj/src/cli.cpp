#include "toricfil/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "toricfil/error.hpp"
#include "toricfil/io.hpp"
#include "toricfil/metrics.hpp"
#include "toricfil/oracles.hpp"

namespace toricfil {

namespace {

using io::Json;

Filtration load_filtration(const std::string& path) {
  const Json j = io::load_json(path);
  // A bare ideal is read as its adic filtration.
  if (j.is_object() && j.contains("generators")) return AdicFiltration::make(io::ideal_from_json(j), 1);
  return io::filtration_from_json(j);
}

SaturatedFiltration load_saturated(const std::string& path) {
  const Json j = io::load_json(path);
  if (j.is_object() && j.contains("halfspaces")) return SaturatedFiltration{io::region_from_json(j)};
  if (j.is_object() && j.contains("generators")) return saturate(Filtration(AdicFiltration::make(io::ideal_from_json(j), 1)));
  return saturate(io::filtration_from_json(j));
}

MonomialIdeal load_ideal(const std::string& path) {
  const Json j = io::load_json(path);
  if (j.is_object() && j.contains("type")) {
    auto f = io::filtration_from_json(j);
    if (const auto* a = std::get_if<AdicFiltration>(&f)) return a->ideal;
    throw Error(ErrorKind::ValidationError, "an ideal or adic filtration is required");
  }
  return io::ideal_from_json(j);
}

Rational flag_rational(const std::string& s) { return parse_rational(s); }

Vec flag_vector(const std::string& s) {
  Vec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw Error(ErrorKind::ParseError, "empty vector flag");
  return v;
}

std::vector<long long> flag_levels(const std::string& s) {
  std::vector<long long> out;
  for (const auto& q : flag_vector(s)) {
    if (q.get_den() != 1 || q < 1) throw Error(ErrorKind::ValidationError, "levels must be positive integers");
    out.push_back(floor_ll(q));
  }
  return out;
}

std::string witness_text(const MetricReport& r) {
  return r.witness ? " witness=" + to_string(*r.witness) : std::string();
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with monomial filtrations on toric singularities.", "toricfil-cli"};
  app.set_help_all_flag("--help-all");
  bool schema = false;
  app.add_flag("--schema", schema, "print the JSON schemas of all input types");
  app.require_subcommand(0, 1);

  std::string a_path, b_path, s_path, c_text = "1", d_text = "1", t_text, lambda_text, tol_text, step_text = "1/4",
                                      u_text, eps_text = "1/10", bound_text = "4", mlist_text = "10,20,40", m_text;
  std::size_t grid_n = 8, max_cells = 1000000;
  bool csv = false, pretty = false, search = false, staircase = false;
  std::string out_fmt = "csv";

  auto two = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("a", a_path, "first filtration JSON (path or inline)")->required();
    sc->add_option("b", b_path, "second filtration JSON (path or inline)")->required();
    return sc;
  };
  auto one = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("input", a_path, "input JSON (path or inline)")->required();
    return sc;
  };

  auto* mult = one("mult", "multiplicity e(F)");
  auto* d1c = two("d1", "d1 distance");
  d1c->add_flag("--csv", csv, "emit CSV rows (input-id, value)");
  auto* d1coeff = two("d1-coeff", "d1 between a^c and b^d for ideals a, b");
  d1coeff->add_option("--c", c_text, "speed of a, p/q");
  d1coeff->add_option("--d", d_text, "speed of b, p/q");
  auto* dinfc = two("dinf", "supnorm distance of the saturations");
  dinfc->add_flag("--csv", csv, "emit CSV rows (input-id, value)");
  auto* meetc = two("meet", "termwise intersection");
  auto* joinc = two("join", "saturated join");
  auto* satc = one("saturate", "saturation");
  auto* closure = one("closure", "integral closure of an ideal");
  closure->add_flag("--pretty", pretty, "x^i y^j rendering");
  auto* rees = one("rees", "Rees valuations of an ideal");
  auto* ideal_at = one("ideal-at", "level ideal a_lambda");
  ideal_at->add_option("--lambda", lambda_text, "level, p/q")->required();
  ideal_at->add_flag("--pretty", pretty, "x^i y^j rendering");
  auto* jumping = one("jumping", "jumping numbers up to a bound");
  jumping->add_option("--bound", bound_text, "upper bound, p/q");
  auto* geo = two("geodesic", "point of the geodesic between two saturated filtrations");
  geo->add_option("--t", t_text, "time in [0, 1], p/q")->required();
  geo->add_option("--lambda", lambda_text, "print the level ideal at lambda");
  geo->add_option("--mult", tol_text, "certified multiplicity interval of this width");
  geo->add_option("--max-cells", max_cells, "cell budget of the certified quadrature");
  geo->add_flag("--csv", csv, "emit t,e_lower,e_upper");
  auto* dh = two("dhgrid", "Duistermaat-Heckman union masses on a grid");
  dh->add_option("--step", step_text, "grid step, p/q");
  dh->add_option("--n", grid_n, "grid count per axis");
  dh->add_option("--out", out_fmt, "output format")->check(CLI::IsMember({"csv"}));
  auto* lctc = app.add_subcommand("lct", "log canonical threshold");
  lctc->add_option("singularity", s_path, "singularity JSON")->required();
  lctc->add_option("filtration", a_path, "filtration JSON")->required();
  auto* nvol = app.add_subcommand("nvol", "normalized volume");
  nvol->add_option("singularity", s_path, "singularity JSON")->required();
  nvol->add_option("--u", u_text, "weight p/q,p/q,...");
  nvol->add_flag("--search", search, "heuristic grid search for the minimum");
  auto* lip = app.add_subcommand("lct-lipschitz", "Lipschitz check for lct");
  lip->add_option("singularity", s_path, "singularity JSON")->required();
  lip->add_option("a", a_path, "first filtration JSON")->required();
  lip->add_option("b", b_path, "second filtration JSON")->required();
  lip->add_option("--eps", eps_text, "epsilon, p/q");
  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  oracle->require_subcommand(1);
  auto* ocol = oracle->add_subcommand("colength", "l(R/a_m) by lattice counting");
  ocol->add_option("input", a_path, "filtration or ideal JSON")->required();
  ocol->add_option("--m", m_text, "level")->required();
  auto* oseq = oracle->add_subcommand("mult-seq", "n! l(R/a_m)/m^n for each level");
  oseq->add_option("input", a_path, "filtration or ideal JSON")->required();
  oseq->add_option("--mlist", mlist_text, "comma-separated levels");
  auto* svg = one("okounkov-svg", "SVG of the Okounkov body (rank 2)");
  svg->add_flag("--staircase", staircase, "draw the staircase of an ideal");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: ValidationError: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (schema) {
      out << io::schemas().dump(2) << "\n";
      return kExitOk;
    }
    if (app.get_subcommands().empty()) {
      err << "error: ValidationError: a subcommand is required\n";
      return kExitValidation;
    }
    if (*mult) {
      out << to_string(multiplicity(load_filtration(a_path))) << "\n";
    } else if (*d1c) {
      const auto v = d1(load_filtration(a_path), load_filtration(b_path));
      if (csv)
        out << "input_id,value\n" << a_path << "|" << b_path << "," << to_string(v) << "\n";
      else
        out << to_string(v) << "\n";
    } else if (*d1coeff) {
      out << to_string(d1_coeff(load_ideal(a_path), flag_rational(c_text), load_ideal(b_path), flag_rational(d_text)))
          << "\n";
    } else if (*dinfc) {
      const auto r = dinf(load_saturated(a_path), load_saturated(b_path));
      if (csv)
        out << "input_id,value,witness\n"
            << a_path << "|" << b_path << "," << to_string(r.value) << "," << (r.witness ? to_string(*r.witness) : "")
            << "\n";
      else
        out << to_string(r.value) << witness_text(r) << "\n";
    } else if (*meetc) {
      const auto m = meet_filtrations(load_filtration(a_path), load_filtration(b_path));
      if (const auto* s = std::get_if<SaturatedFiltration>(&m))
        out << dump(io::to_json(Filtration(*s))) << "\n";
      else
        out << dump(Json{{"type", "deferred-meet"},
                         {"left", io::to_json(std::get<DeferredMeet>(m).left)},
                         {"right", io::to_json(std::get<DeferredMeet>(m).right)},
                         {"shadow", io::to_json(std::get<DeferredMeet>(m).shadow)}})
            << "\n";
    } else if (*joinc) {
      out << dump(io::to_json(Filtration(saturated_join(load_filtration(a_path), load_filtration(b_path))))) << "\n";
    } else if (*satc) {
      out << dump(io::to_json(Filtration(saturate(load_filtration(a_path))))) << "\n";
    } else if (*closure) {
      const auto c = integral_closure(load_ideal(a_path));
      out << (pretty ? to_pretty_string(c) : dump(io::to_json(c))) << "\n";
    } else if (*rees) {
      out << dump(io::to_json(rees_valuations(load_ideal(a_path)))) << "\n";
    } else if (*ideal_at) {
      const auto a = level_ideal(load_filtration(a_path), flag_rational(lambda_text));
      out << (pretty ? to_pretty_string(a) : dump(io::to_json(a))) << "\n";
    } else if (*jumping) {
      Json arr = Json::array();
      for (const auto& q : jumping_numbers(load_saturated(a_path), flag_rational(bound_text))) arr.push_back(to_string(q));
      out << dump(arr) << "\n";
    } else if (*geo) {
      const auto g = Geodesic::make(load_saturated(a_path), load_saturated(b_path));
      const Rational t = flag_rational(t_text);
      if (!tol_text.empty()) {
        const Rational tol = flag_rational(tol_text);
        const Interval e = geodesic_multiplicity(g, t, tol, max_cells);
        if (csv)
          out << io::geodesic_profile_csv({{t, e}});
        else
          out << to_string(e.lo) << " " << to_string(e.hi) << "\n";
      } else if (!lambda_text.empty()) {
        out << dump(io::to_json(geodesic_ideal_at(g, t, flag_rational(lambda_text)))) << "\n";
      } else {
        out << dump(io::to_json(Filtration(geodesic_point(g, t)))) << "\n";
      }
    } else if (*dh) {
      const auto g = Geodesic::make(load_saturated(a_path), load_saturated(b_path));
      out << io::dh_grid_csv(dh_grid(g, flag_rational(step_text), grid_n));
    } else if (*lctc) {
      const auto s = io::singularity_from_json(io::load_json(s_path));
      const auto r = lct(s, load_saturated(a_path));
      out << to_string(r.value) << " witness=" << to_string(r.witness) << " boundary=" << (r.boundary ? "true" : "false")
          << " k=" << to_string(s.k()) << "\n";
    } else if (*nvol) {
      const auto s = io::singularity_from_json(io::load_json(s_path));
      if (search) {
        const auto r = nvol_search(s);
        out << "u=" << to_string(r.u) << " value=" << to_string(r.value) << " stencil=[" << to_string(r.stencil.lo)
            << "," << to_string(r.stencil.hi) << "] heuristic\n";
      } else {
        if (u_text.empty()) throw Error(ErrorKind::ValidationError, "--u or --search is required");
        out << to_string(normalized_volume(s, flag_vector(u_text))) << "\n";
      }
    } else if (*lip) {
      const auto s = io::singularity_from_json(io::load_json(s_path));
      const auto r = lct_lipschitz_check(s, load_saturated(a_path), load_saturated(b_path), flag_rational(eps_text));
      out << "c=" << to_string(r.c) << " a=" << to_string(r.a) << " eps=" << to_string(r.eps)
          << " delta=" << to_string(r.delta) << " dinf=" << to_string(r.dinf) << " lct_a=" << to_string(r.lct_f)
          << " lct_b=" << to_string(r.lct_g) << " applicable=" << (r.applicable ? "true" : "false")
          << " pass=" << (r.pass ? "true" : "false") << "\n";
      if (!r.pass) return kExitTolerance;
    } else if (*ocol) {
      const auto levels = flag_levels(m_text);
      out << brute_colength(load_filtration(a_path), levels.front()) << "\n";
    } else if (*oseq) {
      const auto levels = flag_levels(mlist_text);
      const auto vals = brute_multiplicity(load_filtration(a_path), levels);
      for (std::size_t i = 0; i < levels.size(); ++i) out << levels[i] << " " << to_string(vals[i]) << "\n";
    } else if (*svg) {
      if (staircase)
        out << io::emit_svg(load_ideal(a_path));
      else
        out << io::emit_svg(load_saturated(a_path).region);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ToleranceTooTight ? kExitTolerance : kExitValidation;
  }
  return kExitOk;
}

}  // namespace toricfil
