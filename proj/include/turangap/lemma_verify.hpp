#pragma once
// Verifiers for the analytic machinery behind the degree thresholds.
//
// verify_lll certifies the properties of the threshold curve
//   gamma(t) = (6t - 2(2*delta-1)^2) / (9 + 9t - 12*delta) - epsilon
// over t in [delta/3, 1]: its range, the product identity it satisfies, a
// comparison against the d=3 density ceiling on the relevant subinterval,
// and the non-solvability of the closing quadratic inequality. Strict
// inequalities are certified on a grid with an explicit Lipschitz slack;
// margins inside the slack come back inconclusive, never passed.
//
// verify_condition_of_d cross-checks the per-d density ceilings and
// feasibility thresholds against the wheel polytope machinery.
// verify_general_upper replays the closing inequality of the general
// min-degree bound in exact rational arithmetic. verify_weak_bound checks
// the endpoint analysis of the quadratic used by the weaker d=1 fallback.

#include <cstdint>
#include <vector>

#include "turangap/lemma_reports.hpp"
#include "turangap/rational.hpp"

namespace turangap {

struct LllParams {
  double delta = 0.9415;
  double epsilon = 1e-6;
  double grid_step = 1e-5;
};

// Scalar pieces of the threshold-curve analysis, exposed for reuse and for
// direct interrogation by tests and the CLI.
double lll_s(double t, double delta);                  // 3 + 3t - 4*delta
double lll_gamma(double t, const LllParams& p);        // the curve itself
double lll_t_star(double delta);                       // ((31-32d)^2+15)/48
double lll_g1(double gamma);                           // (325g^2-400g+124)/3
// Closed-form threshold of the closing inequality, epsilon omitted.
double lll_r1(double t, double delta);
// t with gamma(t) = 8/13, by bisection (gamma is increasing in t).
double lll_t_prime(const LllParams& p);
// t with lll_r1 = 1, by bisection; sits slightly below delta/3.
double lll_r1_root(double delta);

// Order-independent grid statistics; identical results with and without
// OpenMP because only min/max reductions are involved.
struct LllGridStats {
  long points = 0;
  double min_gamma_minus_lower = 1e300;   // gamma - 11/18
  double min_two_t_minus_gamma = 1e300;   // 2t - gamma
  double max_identity_residual = 0;       // relative, both sides independent
  double min_identity_rhs = 1e300;        // 6*s*epsilon
  double min_g1_margin = 1e300;           // t - g1(gamma) for gamma <= 8/13
  double min_quadratic_margin = 1e300;    // (t - gamma/2) - c(gamma), t < t*
  double min_dgamma_dt = 1e300;           // formula value
  double max_dgamma_dt = -1e300;
  double max_dgamma_fd_error = 0;         // |finite difference - formula|
  double max_r1_cross_error = 0;          // |r1 - sqrt((t-g/2)/c)| at eps=0
  double min_r1_slope_bracket = 1e300;    // positivity witness for dr1/ds
};

LllGridStats lll_grid_scan(const LllParams& p, bool use_openmp);

LemmaReport verify_lll(const LllParams& p = {});
LemmaReport verify_condition_of_d(const Rational& gamma);
LemmaReport verify_general_upper(int r_max);
LemmaReport verify_weak_bound(const std::vector<long long>& n_values);

}  // namespace turangap
