#include "toricfil/metrics.hpp"

#include <algorithm>
#include <functional>

#include "toricfil/error.hpp"
#include "toricfil/kernels.hpp"
#include "toricfil/linalg.hpp"

namespace toricfil {

Rational d1(const Filtration& f, const Filtration& g) {
  return 2 * multiplicity(meet_filtrations(f, g)) - multiplicity(f) - multiplicity(g);
}

Rational d1_symmetric_difference(const Filtration& f, const Filtration& g) {
  const auto p = shadow(f), q = shadow(g);
  const Rational cm = covolume(meet(p, q));
  // P \ Q is the part of the meet's complement not already outside P.
  const Rational p_minus_q = cm - covolume(p);
  const Rational q_minus_p = cm - covolume(q);
  return factorial(p.cone().rank()) * (p_minus_q + q_minus_p);
}

Rational d1_family_weighted(int l) {
  if (l < 1) throw Error(ErrorKind::ValidationError, "family index must be >= 1");
  const Cone c = Cone::orthant(2);
  const Rational inv(1, l);
  auto p = CoboundedRegion::make(c, {Halfspace::make({Rational(1), inv}, 1)});
  auto q = CoboundedRegion::make(c, {Halfspace::make({inv, Rational(1)}, 1)});
  return d1(SaturatedFiltration{p}, SaturatedFiltration{q});
}

Rational d1_family_closed_form(int l) { return frac(2 * l * l - 2 * l, l + 1); }

Rational d1_coeff(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b, const Rational& d) {
  return d1(AdicFiltration::make(a, c), AdicFiltration::make(b, d));
}

std::vector<Vec> breakpoint_hyperplanes(const std::vector<Vec>& forms) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      Vec d = sub(forms[i], forms[j]);
      if (!is_zero(d)) out.push_back(d);
    }
  return out;
}

std::vector<IntVec> arrangement_rays(const Cone& cone, const std::vector<Vec>& hyperplanes_in) {
  const int n = cone.rank();
  std::vector<IntVec> out = cone.dual_rays();
  if (n == 1) return out;
  // Canonical sign and scale so duplicates collapse.
  std::vector<IntVec> hyper;
  for (const auto& h : hyperplanes_in) {
    if (is_zero(h)) continue;
    IntVec p = primitive(h);
    auto first = std::find_if(p.begin(), p.end(), [](long long x) { return x != 0; });
    if (*first < 0)
      for (auto& x : p) x = -x;
    hyper.push_back(p);
  }
  for (const auto& r : cone.rays()) hyper.push_back(r);
  std::sort(hyper.begin(), hyper.end());
  hyper.erase(std::unique(hyper.begin(), hyper.end()), hyper.end());

  const std::size_t k = static_cast<std::size_t>(n - 1);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (hyper.size() >= k) {
    while (true) {
      Matrix m;
      for (auto i : idx) m.push_back(to_vec(hyper[i]));
      auto ns = nullspace(m, n);
      if (ns.size() == 1) {
        for (int sign : {1, -1}) {
          IntVec r = to_intvec(scale(ns[0], sign));
          if (in_dual(cone, r)) out.push_back(primitive(r));
        }
      }
      // Next k-subset in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == hyper.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

MetricReport optimize_over_rays(const std::vector<IntVec>& rays, const std::function<Rational(const IntVec&)>& f,
                                bool maximize) {
  auto [best, arg] = kernels::argmax_parallel(rays.size(), [&](std::size_t i) {
    Rational v = f(rays[i]);
    return maximize ? v : Rational(-v);
  });
  return {maximize ? best : Rational(-best), rays[arg]};
}

std::vector<Vec> concat(std::initializer_list<std::vector<Vec>> parts) {
  std::vector<Vec> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

MetricReport dinf(const SaturatedFiltration& f, const SaturatedFiltration& g) {
  const auto& p = f.region;
  const auto& q = g.region;
  require_same_cone(p.cone(), q.cone());
  const auto p0 = canonical_filtration(p.cone()).region;
  auto hyper = concat({breakpoint_hyperplanes(cogauge_forms(p)), breakpoint_hyperplanes(cogauge_forms(q)),
                       breakpoint_hyperplanes(cogauge_forms(p0))});
  auto rays = arrangement_rays(p.cone(), hyper);
  return optimize_over_rays(
      rays, [&](const IntVec& r) { return Rational(abs(cogauge(p, r) - cogauge(q, r)) / cogauge(p0, r)); }, true);
}

MetricReport inf_cogauge_ratio(const CoboundedRegion& p, const CoboundedRegion& q) {
  require_same_cone(p.cone(), q.cone());
  auto hyper = concat({breakpoint_hyperplanes(cogauge_forms(p)), breakpoint_hyperplanes(cogauge_forms(q))});
  auto rays = arrangement_rays(p.cone(), hyper);
  return optimize_over_rays(rays, [&](const IntVec& r) { return Rational(cogauge(p, r) / cogauge(q, r)); }, false);
}

long long least_integer_scale(const CoboundedRegion& inner, const CoboundedRegion& outer) {
  require_same_cone(inner.cone(), outer.cone());
  long long c = 2;
  for (const auto& w : inner.vertices()) c = std::max(c, ceil_ll(1 / cogauge(outer, w)));
  return c;
}

DinfBound d1_dinf_bound(const SaturatedFiltration& f, const SaturatedFiltration& g) {
  const Cone& cone = f.region.cone();
  require_same_cone(cone, g.region.cone());
  const auto p0 = canonical_filtration(cone);
  DinfBound out;
  out.c = std::max(least_integer_scale(p0.region, f.region), least_integer_scale(p0.region, g.region));
  const int n = cone.rank();
  Rational cpow = 1;
  for (int i = 0; i < n + 1; ++i) cpow *= static_cast<long>(out.c);
  out.m = 2 * n * cpow * multiplicity(Filtration{p0});
  out.d1 = d1(f, g);
  out.m_times_dinf = out.m * dinf(f, g).value;
  out.holds = out.d1 <= out.m_times_dinf;
  return out;
}

}  // namespace toricfil
