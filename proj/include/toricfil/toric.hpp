#pragma once

#include <vector>

#include "toricfil/filtration.hpp"
#include "toricfil/quadrature.hpp"

namespace toricfil {

// Q-Gorenstein toric singularity; k pairs to 1 with every ray of sigma, so
// the log discrepancy of v_u is <u, k>.
class ToricSingularity {
 public:
  static ToricSingularity make(const Cone& cone);
  const Cone& cone() const { return cone_; }
  const Vec& k() const { return k_; }

 private:
  Cone cone_;
  Vec k_;
};

Vec gorenstein_vector(const Cone& cone);
Rational log_discrepancy(const ToricSingularity& s, const Vec& u);

struct LctReport {
  Rational value;
  IntVec witness;
  bool boundary = false;  // minimizer on the boundary of sigma
};
LctReport lct(const ToricSingularity& s, const SaturatedFiltration& f);

Rational toric_volume(const ToricSingularity& s, const Vec& u);
Rational normalized_volume(const ToricSingularity& s, const Vec& u);

// Heuristic grid search with local refinement; no optimality certificate.
struct NvolSearchResult {
  Vec u;
  Rational value;
  Interval stencil;  // range of values over the final refinement stencil
};
NvolSearchResult nvol_search(const ToricSingularity& s, int grid = 16, int rounds = 8);

enum class SemicontinuityMode { WeakLower, PlusUpper };
struct SemicontinuityReport {
  std::vector<Rational> lcts;
  Rational limit_lct;
  Rational estimate;  // last-term estimate of liminf or limsup
  bool pass = false;
};
SemicontinuityReport lct_semicontinuity_harness(const ToricSingularity& s,
                                                const std::vector<SaturatedFiltration>& seq,
                                                const SaturatedFiltration& limit, SemicontinuityMode mode,
                                                const std::vector<IntVec>& monomial_probes,
                                                const std::vector<Vec>& weight_probes, const Rational& tol);

struct LctLipschitzReport {
  Rational c, a, eps, delta, dinf, lct_f, lct_g;
  bool applicable = false;
  bool pass = false;
};
LctLipschitzReport lct_lipschitz_check(const ToricSingularity& s, const SaturatedFiltration& f,
                                       const SaturatedFiltration& g, const Rational& eps);

}  // namespace toricfil
