#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "toricfil/filtration.hpp"

namespace toricfil {

struct MetricReport {
  Rational value;
  std::optional<IntVec> witness;  // primitive ray attaining a sup or inf
};

Rational d1(const Filtration& f, const Filtration& g);
// n! (vol(P \ Q) + vol(Q \ P)), evaluated through the two set differences.
Rational d1_symmetric_difference(const Filtration& f, const Filtration& g);
// d1 between {x + y/l >= 1} and {x/l + y >= 1}.
Rational d1_family_weighted(int l);
Rational d1_family_closed_form(int l);
// Distance between a^c and b^d, i.e. the adic filtrations with those speeds.
Rational d1_coeff(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b, const Rational& d);

// Sup over the dual semigroup of |tau_P - tau_Q| / tau_P0, exact by ray enumeration.
MetricReport dinf(const SaturatedFiltration& f, const SaturatedFiltration& g);

struct DinfBound {
  Rational d1;
  Rational m_times_dinf;
  Rational m;
  long long c = 0;
  bool holds = false;
};
DinfBound d1_dinf_bound(const SaturatedFiltration& f, const SaturatedFiltration& g);

// Least integer C >= 2 with C * inner contained in outer.
long long least_integer_scale(const CoboundedRegion& inner, const CoboundedRegion& outer);

// Rays of the dual cone where some n-1 of the given hyperplanes (or dual
// cone facets) meet. Every cell of the arrangement has its extreme rays here.
std::vector<IntVec> arrangement_rays(const Cone& cone, const std::vector<Vec>& hyperplanes);
// Pairwise differences of linear forms, the breakpoints of their minimum.
std::vector<Vec> breakpoint_hyperplanes(const std::vector<Vec>& forms);

// Inf over the dual cone of tau_P / tau_Q, attained on an arrangement ray.
MetricReport inf_cogauge_ratio(const CoboundedRegion& p, const CoboundedRegion& q);

namespace detail {
inline std::optional<Rational> gap(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a && !b) return Rational(0);
  if (!a || !b) return std::nullopt;
  return abs(*a - *b);
}

// A finite prefix converges when every probe's error is non-increasing over
// the second half of the prefix and ends within tol.
template <typename Seq, typename Limit, typename Probe, typename Eval>
bool prefix_converges(const Seq& seq, const Limit& limit, const std::vector<Probe>& probes, const Rational& tol,
                      Eval eval) {
  if (seq.empty()) return false;
  const std::size_t start = seq.size() / 2;
  for (const auto& probe : probes) {
    auto target = eval(limit, probe);
    std::optional<Rational> prev;
    for (std::size_t k = start; k < seq.size(); ++k) {
      auto e = gap(eval(seq[k], probe), target);
      if (!e) return false;
      if (prev && *e > *prev) return false;
      prev = e;
    }
    if (*prev > tol) return false;
  }
  return true;
}
}  // namespace detail

inline const Rational& default_tolerance() {
  static const Rational tol(1, 1000000);
  return tol;
}

// Weak convergence tested through ord on monomial probes.
template <typename Seq, typename Limit>
bool converges_weakly(const Seq& seq, const Limit& limit, const std::vector<IntVec>& probes,
                      const Rational& tol = default_tolerance()) {
  return detail::prefix_converges(seq, limit, probes, tol, [](const auto& f, const IntVec& m) { return ord(f, m); });
}

// Plus-topology convergence tested through valuations at interior weights.
template <typename Seq, typename Limit>
bool converges_plus(const Seq& seq, const Limit& limit, const std::vector<Vec>& probes,
                    const Rational& tol = default_tolerance()) {
  return detail::prefix_converges(seq, limit, probes, tol, [](const auto& f, const Vec& u) {
    return std::optional<Rational>(evaluate(f, u));
  });
}

}  // namespace toricfil
