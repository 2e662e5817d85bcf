#pragma once
// Weighted blow-up analysis of the wheels F_d + K_1.
//
// A weight vector x on the wheel (nonnegative, summing to 1, every
// neighbourhood sum at least gamma) is the limit shape of a graph that
// colours into the wheel while keeping minimum degree gamma*n; its blow-up
// edge density is e(x) = sum over wheel edges of x_u x_v. wheel_max
// searches the polytope for the densest point it can certify — an ascent
// from many starts plus exact polytope vertices — so its value is a lower
// bound on the true maximum, while the bound_* polynomials cap the same
// quantity from above.

#include <cstdint>
#include <vector>

#include "turangap/graph.hpp"
#include "turangap/rational.hpp"

namespace turangap {

// F_d joined with a hub; rim vertices 0..3d-2, hub 3d-1.
Graph make_wheel(int d);

// (3d-1)/(5d-2): the largest gamma with a nonempty weight polytope.
Rational wheel_gamma_limit(int d);

// The fully symmetric point: 1/(5d-2) per rim vertex, (2d-1)/(5d-2) on the
// hub. Every neighbourhood sum equals wheel_gamma_limit(d), so it is
// feasible for every feasible gamma, and its energy is (3d-1)/(2(5d-2)).
std::vector<Rational> wheel_balanced_point(int d);

// Density ceilings for graphs colourable into the wheel with min degree
// gamma*n. bound_general covers every d; bound_d2 is the sharper d=2 form
// 12g^2 - 15g + 5 (general minus it is a perfect square over 3).
Rational bound_general(int d, const Rational& gamma);
Rational bound_d2(const Rational& gamma);

Rational wheel_energy_exact(const Graph& wheel, const std::vector<Rational>& x);
double wheel_energy(const Graph& wheel, const std::vector<double>& x);

// Exact rational phase-1 feasibility of the weight polytope.
bool wheel_feasible(int d, const Rational& gamma);

struct WheelMaxResult {
  int d = 0;
  Rational gamma;
  bool feasible = false;
  double value = 0.0;               // best blow-up density found
  std::vector<double> x;            // weights attaining it
  double min_neighborhood_sum = 0;  // feasibility margin of x
  int restarts = 0;
};

// Multi-start concave-step ascent over the polytope, seeded from exact
// vertices. Deterministic for fixed (d, gamma, restarts, seed) regardless
// of thread count; restarts run in parallel under OpenMP.
WheelMaxResult wheel_max(int d, const Rational& gamma, int restarts = 64,
                         std::uint64_t seed = 0);

}  // namespace turangap
