#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <random>

#include "turangap/simplex_lp.hpp"
#include "turangap/wheel.hpp"

using namespace turangap;

TEST_SUITE_BEGIN("wheel");

TEST_CASE("simplex solves a textbook program exactly") {
  LinearProgram<Rational> lp(2);
  lp.objective = {Rational(1), Rational(1)};
  lp.add_constraint({Rational(1), Rational(2)}, Relation::kLe, Rational(4));
  lp.add_constraint({Rational(3), Rational(1)}, Relation::kLe, Rational(6));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == Rational(14, 5));
  CHECK(sol.x[0] == Rational(8, 5));
  CHECK(sol.x[1] == Rational(6, 5));
}

TEST_CASE("simplex handles minimisation, equalities and negative rhs") {
  {
    LinearProgram<Rational> lp(1);
    lp.maximize = false;
    lp.objective = {Rational(1)};
    lp.add_constraint({Rational(1)}, Relation::kGe, Rational(3));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == Rational(3));
  }
  {
    LinearProgram<Rational> lp(2);
    lp.objective = {Rational(2), Rational(1)};
    lp.add_constraint({Rational(1), Rational(1)}, Relation::kEq, Rational(1));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == Rational(2));
    CHECK(sol.x[0] == Rational(1));
  }
  {
    // -x - y <= -1 normalises to x + y >= 1.
    LinearProgram<Rational> lp(2);
    lp.maximize = false;
    lp.objective = {Rational(1), Rational(1)};
    lp.add_constraint({Rational(-1), Rational(-1)}, Relation::kLe, Rational(-1));
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == Rational(1));
  }
}

TEST_CASE("simplex reports infeasible and unbounded programs") {
  {
    LinearProgram<Rational> lp(1);
    lp.add_constraint({Rational(1)}, Relation::kLe, Rational(1));
    lp.add_constraint({Rational(1)}, Relation::kGe, Rational(2));
    CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
  }
  {
    LinearProgram<Rational> lp(2);
    lp.objective = {Rational(1), Rational(0)};
    lp.add_constraint({Rational(0), Rational(1)}, Relation::kLe, Rational(5));
    CHECK(solve_lp(lp).status == LpStatus::kUnbounded);
  }
}

TEST_CASE("smallest-index pivoting survives the classic cycling example") {
  // Beale's degenerate instance; naive most-negative pivoting cycles here.
  LinearProgram<Rational> lp(4);
  lp.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  lp.add_constraint({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
                    Relation::kLe, Rational(0));
  lp.add_constraint({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
                    Relation::kLe, Rational(0));
  lp.add_constraint({Rational(0), Rational(0), Rational(1), Rational(0)},
                    Relation::kLe, Rational(1));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == Rational(1, 20));
  CHECK(sol.x[0] == Rational(1, 25));
  CHECK(sol.x[2] == Rational(1));
}

TEST_CASE("double and exact instantiations agree on random programs") {
  std::mt19937_64 rng(0xabcdef12ULL);
  int optimal_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    int nv = 2 + int(rng() % 3), nc = 2 + int(rng() % 4);
    LinearProgram<Rational> ex(nv);
    LinearProgram<double> fl(nv);
    for (int j = 0; j < nv; ++j) {
      int c = int(rng() % 11) - 5;
      ex.objective[std::size_t(j)] = c;
      fl.objective[std::size_t(j)] = c;
    }
    for (int i = 0; i < nc; ++i) {
      std::vector<Rational> re(static_cast<std::size_t>(nv));
      std::vector<double> rf(static_cast<std::size_t>(nv));
      for (int j = 0; j < nv; ++j) {
        int c = int(rng() % 11) - 5;
        re[std::size_t(j)] = c;
        rf[std::size_t(j)] = c;
      }
      Relation rel = std::array{Relation::kLe, Relation::kGe,
                                Relation::kEq}[rng() % 3];
      int b = int(rng() % 10);
      ex.add_constraint(std::move(re), rel, Rational(b));
      fl.add_constraint(std::move(rf), rel, double(b));
    }
    // Keep the feasible region bounded so statuses are clean-cut.
    ex.add_constraint(std::vector<Rational>(std::size_t(nv), Rational(1)),
                      Relation::kLe, Rational(20));
    fl.add_constraint(std::vector<double>(std::size_t(nv), 1.0), Relation::kLe,
                      20.0);
    auto se = solve_lp(ex);
    auto sf = solve_lp(fl);
    CHECK(se.status == sf.status);
    if (se.status == LpStatus::kOptimal && sf.status == LpStatus::kOptimal) {
      ++optimal_seen;
      CHECK(std::abs(to_double(se.objective) - sf.objective) <= 1e-6);
    }
  }
  CHECK(optimal_seen > 5);
}

TEST_CASE("wheel graphs and their gamma limits") {
  for (int d = 1; d <= 4; ++d) {
    Graph w = make_wheel(d);
    CHECK(w.vertex_count() == 3 * d);
    CHECK(w.degree(3 * d - 1) == 3 * d - 1);  // hub dominates
    for (int v = 0; v + 1 < 3 * d; ++v) CHECK(w.degree(v) == d + 1);
    CHECK(w.edge_count() == (3 * d - 1) * (d + 2) / 2);
  }
  CHECK(wheel_gamma_limit(1) == Rational(2, 3));
  CHECK(wheel_gamma_limit(2) == Rational(5, 8));
  CHECK(wheel_gamma_limit(3) == Rational(8, 13));
  CHECK(wheel_gamma_limit(4) == Rational(11, 18));
  CHECK(wheel_gamma_limit(4) < wheel_gamma_limit(3));
  CHECK(wheel_gamma_limit(3) < wheel_gamma_limit(2));
  CHECK_THROWS_AS(make_wheel(0), GraphError);
  CHECK_THROWS_AS(wheel_gamma_limit(10), GraphError);
}

TEST_CASE("the symmetric point saturates every neighbourhood sum") {
  for (int d = 2; d <= 4; ++d) {
    Graph w = make_wheel(d);
    auto x = wheel_balanced_point(d);
    Rational total(0);
    for (const auto& v : x) total += v;
    CHECK(total == 1);
    for (int v = 0; v < w.vertex_count(); ++v) {
      Rational s(0);
      w.neighbors(v).for_each([&](int u) { s += x[std::size_t(u)]; });
      CHECK(s == wheel_gamma_limit(d));
    }
    CHECK(wheel_energy_exact(w, x) == Rational(3 * d - 1, 2 * (5 * d - 2)));
  }
  CHECK(wheel_energy_exact(make_wheel(2), wheel_balanced_point(2)) ==
        Rational(5, 16));
}

TEST_CASE("density ceilings at their tight points") {
  Rational g(8, 13);
  CHECK(bound_d2(g) == Rational(53, 169));
  CHECK(bound_general(3, g) == Rational(4, 13));
  CHECK(bound_general(4, Rational(11, 18)) == Rational(11, 36));
  // The d=2 specialisation exceeds the sharper form by a perfect square.
  for (int j = 0; j <= 40; ++j) {
    Rational gamma(j, 40);
    Rational diff = bound_general(2, gamma) - bound_d2(gamma);
    Rational root = Rational(8) * gamma - Rational(5);
    CHECK(diff == root * root / Rational(3));
  }
}

TEST_CASE("polytope feasibility flips exactly at the gamma limit") {
  for (int d = 2; d <= 4; ++d) {
    Rational limit = wheel_gamma_limit(d);
    CHECK(wheel_feasible(d, limit));
    CHECK(wheel_feasible(d, limit - Rational(1, 1000)));
    CHECK(wheel_feasible(d, Rational(0)));
    CHECK(!wheel_feasible(d, limit + Rational(1, 1000)));
    CHECK(!wheel_feasible(d, Rational(2, 3)));
  }
}

TEST_CASE("wheel_max pins the boundary point where the polytope degenerates") {
  // At the limit the polytope is the single symmetric point, so the search
  // must return its energy to roundoff.
  auto r2 = wheel_max(2, Rational(5, 8), 8, 7);
  REQUIRE(r2.feasible);
  CHECK(std::abs(r2.value - 5.0 / 16.0) <= 1e-9);
  CHECK(r2.min_neighborhood_sum >= 5.0 / 8.0 - 1e-9);
  for (std::size_t i = 0; i < r2.x.size(); ++i)
    CHECK(std::abs(r2.x[i] - to_double(wheel_balanced_point(2)[i])) <= 1e-9);

  auto r3 = wheel_max(3, Rational(8, 13), 8, 7);
  CHECK(std::abs(r3.value - 4.0 / 13.0) <= 1e-9);
  auto r4 = wheel_max(4, Rational(11, 18), 8, 7);
  CHECK(std::abs(r4.value - 11.0 / 36.0) <= 1e-9);
}

TEST_CASE("wheel_max stays under the ceiling and over the symmetric point") {
  for (int d = 2; d <= 4; ++d) {
    Rational limit = wheel_gamma_limit(d);
    for (int j = 1; j <= 4; ++j) {
      Rational gamma = limit * Rational(j, 4);
      auto res = wheel_max(d, gamma, 12, 3);
      REQUIRE(res.feasible);
      Rational cap = (d == 2) ? bound_d2(gamma) : bound_general(d, gamma);
      CHECK(res.value <= to_double(cap) + 1e-6);
      CHECK(res.value >= to_double(Rational(3 * d - 1, 2 * (5 * d - 2))) - 1e-12);
      CHECK(res.min_neighborhood_sum >= to_double(gamma) - 1e-9);
    }
  }
}

TEST_CASE("wheel_max is deterministic and reports infeasibility") {
  auto a = wheel_max(2, Rational(1, 2), 10, 42);
  auto b = wheel_max(2, Rational(1, 2), 10, 42);
  CHECK(a.value == b.value);
  CHECK(a.x == b.x);
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(2);
  auto c = wheel_max(2, Rational(1, 2), 10, 42);
  omp_set_num_threads(saved);
  CHECK(a.value == c.value);
  CHECK(a.x == c.x);
#endif
  auto bad = wheel_max(2, Rational(7, 10), 4, 0);
  CHECK(!bad.feasible);
  CHECK(bad.x.empty());
}

TEST_SUITE_END();
