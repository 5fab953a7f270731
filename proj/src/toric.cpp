#include "toricfil/toric.hpp"

#include <algorithm>

#include "toricfil/error.hpp"
#include "toricfil/linalg.hpp"
#include "toricfil/metrics.hpp"

namespace toricfil {

Vec gorenstein_vector(const Cone& cone) {
  const int n = cone.rank();
  Matrix rows;
  for (const auto& r : cone.rays()) {
    Vec row = to_vec(r);
    row.push_back(-1);
    rows.push_back(std::move(row));
  }
  auto ns = nullspace(rows, n + 1);
  if (ns.size() != 1 || ns[0][n] == 0)
    throw Error(ErrorKind::NotQGorenstein, "no k with <ray, k> = 1 for every ray");
  Vec k(ns[0].begin(), ns[0].begin() + n);
  k = scale(k, 1 / ns[0][n]);
  if (dual_membership(cone, k) != Membership::Interior)
    throw Error(ErrorKind::NotKlt, "Gorenstein vector not interior to the dual cone");
  return k;
}

ToricSingularity ToricSingularity::make(const Cone& cone) {
  ToricSingularity s;
  s.cone_ = cone;
  s.k_ = gorenstein_vector(cone);
  return s;
}

namespace {
void require_interior(const Cone& cone, const Vec& u) {
  if (static_cast<int>(u.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "u length");
  if (membership(cone, u) != Membership::Interior)
    throw Error(ErrorKind::NotInteriorValuation, "u = " + to_string(u) + " not interior to sigma");
}
}  // namespace

Rational log_discrepancy(const ToricSingularity& s, const Vec& u) {
  require_interior(s.cone(), u);
  return dot(u, s.k());
}

LctReport lct(const ToricSingularity& s, const SaturatedFiltration& f) {
  const auto& p = f.region;
  require_same_cone(s.cone(), p.cone());
  // A/h is linear-fractional on each normal-fan cell; its rays are the facet
  // normals plus the rays of sigma, where h vanishes for cobounded P.
  std::vector<std::pair<IntVec, bool>> candidates;
  for (const auto& h : p.halfspaces()) candidates.push_back({h.normal, false});
  for (const auto& r : s.cone().rays()) candidates.push_back({r, true});
  std::sort(candidates.begin(), candidates.end());
  LctReport best;
  bool found = false;
  for (const auto& [u, on_boundary] : candidates) {
    Rational h = support_value(p, u);
    if (h <= 0) continue;
    Rational v = dot(u, s.k()) / h;
    if (!found || v < best.value) {
      best = {v, u, on_boundary};
      found = true;
    }
  }
  return best;
}

Rational toric_volume(const ToricSingularity& s, const Vec& u) {
  require_interior(s.cone(), u);
  auto region = CoboundedRegion::make(s.cone(), {Halfspace::make(u, 1)});
  return factorial(s.cone().rank()) * covolume(region);
}

Rational normalized_volume(const ToricSingularity& s, const Vec& u) {
  Rational a = log_discrepancy(s, u), an = 1;
  for (int i = 0; i < s.cone().rank(); ++i) an *= a;
  return an * toric_volume(s, u);
}

NvolSearchResult nvol_search(const ToricSingularity& s, int grid, int rounds) {
  const auto& rays = s.cone().rays();
  const std::size_t r = rays.size();
  auto point = [&](const std::vector<Rational>& w) {
    Vec u(s.cone().rank(), Rational(0));
    for (std::size_t j = 0; j < r; ++j) u = add(u, scale(to_vec(rays[j]), w[j]));
    return u;
  };
  auto interior = [&](const std::vector<Rational>& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; });
  };
  // Initial barycentric grid with all weights positive.
  std::vector<std::vector<Rational>> pts;
  std::vector<int> c(r, 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j + 1 == r) {
      if (left >= 1) {
        c[j] = left;
        std::vector<Rational> w;
        for (auto x : c) w.push_back(frac(x, grid));
        pts.push_back(w);
      }
      return;
    }
    for (int x = 1; x <= left - static_cast<int>(r - j - 1); ++x) {
      c[j] = x;
      rec(j + 1, left - x);
    }
  };
  if (r == 1) {
    pts.push_back({Rational(1)});
  } else {
    rec(0, grid);
  }
  std::vector<Rational> best_w = pts.front();
  Rational best = normalized_volume(s, point(best_w));
  for (const auto& w : pts) {
    Rational v = normalized_volume(s, point(w));
    if (v < best) best = v, best_w = w;
  }
  Rational h(1, grid);
  Interval stencil{best, best};
  for (int round = 0; round < rounds && r > 1; ++round) {
    h /= 2;
    stencil = {best, best};
    auto centre = best_w;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        auto w = centre;
        w[i] += h;
        w[j] -= h;
        if (!interior(w)) continue;
        Rational v = normalized_volume(s, point(w));
        stencil.lo = std::min(stencil.lo, v);
        stencil.hi = std::max(stencil.hi, v);
        if (v < best) best = v, best_w = w;
      }
  }
  return {point(best_w), best, stencil};
}

SemicontinuityReport lct_semicontinuity_harness(const ToricSingularity& s,
                                                const std::vector<SaturatedFiltration>& seq,
                                                const SaturatedFiltration& limit, SemicontinuityMode mode,
                                                const std::vector<IntVec>& monomial_probes,
                                                const std::vector<Vec>& weight_probes, const Rational& tol) {
  if (seq.empty()) throw Error(ErrorKind::ValidationError, "empty sequence");
  const bool converges = mode == SemicontinuityMode::WeakLower
                             ? converges_weakly(seq, limit, monomial_probes, tol)
                             : converges_plus(seq, limit, weight_probes, tol);
  if (!converges) throw Error(ErrorKind::ModeMismatch, "sequence does not converge in the requested topology");
  SemicontinuityReport rep;
  for (const auto& f : seq) rep.lcts.push_back(lct(s, f).value);
  rep.limit_lct = lct(s, limit).value;
  rep.estimate = rep.lcts.back();
  rep.pass = mode == SemicontinuityMode::WeakLower ? rep.limit_lct <= rep.estimate + tol
                                                   : rep.limit_lct >= rep.estimate - tol;
  return rep;
}

LctLipschitzReport lct_lipschitz_check(const ToricSingularity& s, const SaturatedFiltration& f,
                                       const SaturatedFiltration& g, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorKind::ValidationError, "epsilon must be positive");
  LctLipschitzReport rep;
  const auto p0 = canonical_filtration(s.cone());
  rep.c = inf_cogauge_ratio(f.region, p0.region).value;
  rep.lct_f = lct(s, f).value;
  rep.lct_g = lct(s, g).value;
  rep.a = rep.lct_f;
  rep.eps = eps;
  rep.delta = std::min(Rational(rep.c / 2), Rational(rep.c * eps / rep.a));
  rep.dinf = dinf(f, g).value;
  rep.applicable = rep.dinf < rep.delta;
  rep.pass = !rep.applicable || abs(rep.lct_g - rep.lct_f) <= eps;
  return rep;
}

}  // namespace toricfil
