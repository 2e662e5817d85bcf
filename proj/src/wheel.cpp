#include "turangap/wheel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "turangap/constructions.hpp"
#include "turangap/errors.hpp"
#include "turangap/prng.hpp"
#include "turangap/simplex_lp.hpp"

namespace turangap {

namespace {

void require_d(int d) {
  if (d < 1 || d > 9) throw GraphError("wheel: d must be in [1, 9]");
}

// Sum-to-one plus one neighbourhood-sum row per vertex.
template <typename Scalar>
LinearProgram<Scalar> polytope_lp(const Graph& w, const Scalar& gamma) {
  const int n = w.vertex_count();
  LinearProgram<Scalar> lp(n);
  lp.add_constraint(std::vector<Scalar>(std::size_t(n), Scalar(1)), Relation::kEq,
                    Scalar(1));
  for (int v = 0; v < n; ++v) {
    std::vector<Scalar> row(std::size_t(n), Scalar(0));
    w.neighbors(v).for_each([&](int u) { row[std::size_t(u)] = Scalar(1); });
    lp.add_constraint(std::move(row), Relation::kGe, gamma);
  }
  return lp;
}

}  // namespace

Graph make_wheel(int d) {
  require_d(d);
  return join(make_F(d), families::complete(1));
}

Rational wheel_gamma_limit(int d) {
  require_d(d);
  return Rational(3 * d - 1, 5 * d - 2);
}

std::vector<Rational> wheel_balanced_point(int d) {
  require_d(d);
  std::vector<Rational> x(std::size_t(3 * d), Rational(1, 5 * d - 2));
  x.back() = Rational(2 * d - 1, 5 * d - 2);
  return x;
}

Rational bound_general(int d, const Rational& gamma) {
  require_d(d);
  Rational dd(d), g = gamma;
  return (Rational(125) * dd * dd * g * g - Rational(150) * dd * dd * g +
          Rational(45) * dd * dd - Rational(175) * dd * g * g +
          Rational(200) * dd * g - Rational(57) * dd + Rational(50) * g * g -
          Rational(50) * g + Rational(14)) /
         Rational(6);
}

Rational bound_d2(const Rational& gamma) {
  return Rational(12) * gamma * gamma - Rational(15) * gamma + Rational(5);
}

Rational wheel_energy_exact(const Graph& wheel, const std::vector<Rational>& x) {
  if ((int)x.size() != wheel.vertex_count())
    throw GraphError("wheel_energy: weight vector has wrong length");
  Rational e(0);
  for (auto [u, v] : wheel.edges()) e += x[std::size_t(u)] * x[std::size_t(v)];
  return e;
}

double wheel_energy(const Graph& wheel, const std::vector<double>& x) {
  if ((int)x.size() != wheel.vertex_count())
    throw GraphError("wheel_energy: weight vector has wrong length");
  double e = 0;
  for (auto [u, v] : wheel.edges()) e += x[std::size_t(u)] * x[std::size_t(v)];
  return e;
}

bool wheel_feasible(int d, const Rational& gamma) {
  Graph w = make_wheel(d);
  return solve_lp(polytope_lp<Rational>(w, gamma)).status != LpStatus::kInfeasible;
}

namespace {

struct AscentContext {
  const Graph& w;
  std::vector<std::pair<int, int>> edges;
  LinearProgram<double> lp;  // objective rewritten per direction query

  AscentContext(const Graph& wheel, double gamma)
      : w(wheel), edges(wheel.edges()), lp(polytope_lp<double>(wheel, gamma)) {}

  double energy(const std::vector<double>& x) const {
    double e = 0;
    for (auto [u, v] : edges) e += x[std::size_t(u)] * x[std::size_t(v)];
    return e;
  }

  std::vector<double> gradient(const std::vector<double>& x) const {
    std::vector<double> g(x.size(), 0.0);
    for (auto [u, v] : edges) {
      g[std::size_t(u)] += x[std::size_t(v)];
      g[std::size_t(v)] += x[std::size_t(u)];
    }
    return g;
  }

  // Best vertex of the polytope in direction `obj`, or empty on trouble.
  std::vector<double> extreme(const std::vector<double>& obj) {
    lp.objective = obj;
    auto sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) return {};
    return sol.x;
  }

  // Conditional-gradient ascent: move toward the polytope vertex the
  // current gradient points at, stepping to the exact maximum of the
  // quadratic on the segment.
  double ascend(std::vector<double>& x, int max_iters = 200) {
    double val = energy(x);
    for (int it = 0; it < max_iters; ++it) {
      std::vector<double> s = extreme(gradient(x));
      if (s.empty()) break;
      std::vector<double> dir(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) dir[i] = s[i] - x[i];
      double b1 = 0;  // directional derivative
      {
        auto g = gradient(x);
        for (std::size_t i = 0; i < x.size(); ++i) b1 += g[i] * dir[i];
      }
      double b2 = energy(dir);  // curvature term; any sign
      double step;
      if (b2 < -1e-15) {
        step = std::clamp(-b1 / (2 * b2), 0.0, 1.0);
      } else {
        step = (b1 + b2 > 0) ? 1.0 : 0.0;
      }
      double gain = b2 * step * step + b1 * step;
      if (gain <= 1e-14) break;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += step * dir[i];
      val += gain;
    }
    return energy(x);  // recompute; incremental gains accumulate error
  }
};

}  // namespace

WheelMaxResult wheel_max(int d, const Rational& gamma, int restarts,
                         std::uint64_t seed) {
  Graph w = make_wheel(d);
  const int n = w.vertex_count();
  WheelMaxResult out;
  out.d = d;
  out.gamma = gamma;
  out.restarts = restarts;

  if (!wheel_feasible(d, gamma)) return out;
  out.feasible = true;

  // Exact polytope vertices along the coordinate directions, plus the
  // symmetric point; these are both candidates and ascent seeds.
  std::vector<std::vector<double>> pool;
  {
    std::vector<double> star;
    for (const Rational& v : wheel_balanced_point(d)) star.push_back(to_double(v));
    pool.push_back(std::move(star));

    LinearProgram<Rational> lp = polytope_lp<Rational>(w, gamma);
    for (int v = 0; v < n; ++v) {
      for (Rational sign : {Rational(1), Rational(-1)}) {
        std::fill(lp.objective.begin(), lp.objective.end(), Rational(0));
        lp.objective[std::size_t(v)] = sign;
        auto sol = solve_lp(lp);
        if (sol.status != LpStatus::kOptimal) continue;
        std::vector<double> pt;
        for (const Rational& c : sol.x) pt.push_back(to_double(c));
        pool.push_back(std::move(pt));
      }
    }
  }

  AscentContext ctx(w, to_double(gamma));

  // Hub-uniform-rim family has a closed form; add its best point. With
  // hub weight b and rim (1-b)/(3d-1) each, the density is a quadratic in
  // b over an interval, so the maximum sits at an endpoint or the apex.
  {
    double lo = std::max(0.0, (to_double(gamma) * (3 * d - 1) - d) / (2 * d - 1));
    double hi = 1.0 - to_double(gamma);
    if (lo <= hi) {
      auto family = [&](double b) {
        std::vector<double> x(std::size_t(n), (1.0 - b) / (3 * d - 1));
        x.back() = b;
        return x;
      };
      // e(b) = d(1-b)^2 / (2(3d-1)) + (1-b) b; stationary point in b.
      double c2 = d / (2.0 * (3 * d - 1)) - 1.0;
      double c1 = -2.0 * d / (2.0 * (3 * d - 1)) + 1.0;
      for (double b : {lo, hi, std::clamp(-c1 / (2 * c2), lo, hi)})
        pool.push_back(family(b));
    }
  }

  const std::size_t npool = pool.size();

  // Independent ascent per restart; restart 0 starts from the symmetric
  // point, the rest from random convex mixes of the pool. Results land in
  // a per-restart slot so the reduction is order-independent.
  std::vector<double> best_val(std::size_t(std::max(restarts, 0)), -1.0);
  std::vector<std::vector<double>> best_x(std::size_t(std::max(restarts, 0)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int r = 0; r < restarts; ++r) {
    try {
      AscentContext local(w, to_double(gamma));
      std::vector<double> x;
      if (r == 0) {
        x = pool.front();
      } else {
        std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(std::uint64_t(r)));
        std::vector<double> wts(npool);
        double total = 0;
        for (auto& t : wts) {
          t = -std::log((rng() >> 11) * 0x1.0p-53 + 0x1.0p-60);
          total += t;
        }
        x.assign(std::size_t(n), 0.0);
        for (std::size_t p = 0; p < npool; ++p)
          for (int i = 0; i < n; ++i) x[std::size_t(i)] += wts[p] / total * pool[p][std::size_t(i)];
      }
      best_val[std::size_t(r)] = local.ascend(x);
      best_x[std::size_t(r)] = std::move(x);
    } catch (...) {
      // A stalled ascent must not tear down the parallel region; the slot
      // simply stays at -1 and loses the reduction.
    }
  }

  // Deterministic reduction: plain candidates first, then restart slots in
  // index order, strict improvement only.
  out.value = -1.0;
  for (const auto& p : pool) {
    double e = ctx.energy(p);
    if (e > out.value) {
      out.value = e;
      out.x = p;
    }
  }
  for (int r = 0; r < restarts; ++r) {
    if (best_val[std::size_t(r)] > out.value) {
      out.value = best_val[std::size_t(r)];
      out.x = best_x[std::size_t(r)];
    }
  }

  double margin = 1e300;
  for (int v = 0; v < n; ++v) {
    double s = 0;
    w.neighbors(v).for_each([&](int u) { s += out.x[std::size_t(u)]; });
    margin = std::min(margin, s);
  }
  out.min_neighborhood_sum = margin;
  return out;
}

}  // namespace turangap
