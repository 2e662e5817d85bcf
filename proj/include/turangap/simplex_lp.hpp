#pragma once
// Dense two-phase simplex, templated on the scalar.
//
// Rows are <=, >= or == over nonnegative variables; the objective may be
// maximised or minimised. Bland's smallest-index rule picks both the
// entering column and (on ratio ties) the leaving row, which makes the
// exact-rational instantiation provably cycle-free; the double
// instantiation adds a small pivot tolerance on top of the same code path.
// Intended for the small dense programs that show up here (tens of rows),
// not as a general-purpose LP library.

#include <stdexcept>
#include <utility>
#include <vector>

namespace turangap {

enum class Relation { kLe, kGe, kEq };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <typename Scalar>
struct LpTolerance {
  static Scalar pivot() { return Scalar(0); }
  static Scalar feasibility() { return Scalar(0); }
};
template <>
struct LpTolerance<double> {
  static double pivot() { return 1e-9; }
  static double feasibility() { return 1e-7; }
};

template <typename Scalar>
struct LinearProgram {
  int num_vars = 0;
  bool maximize = true;
  std::vector<Scalar> objective;          // length num_vars; defaults to 0
  std::vector<std::vector<Scalar>> rows;  // each of length num_vars
  std::vector<Relation> relations;
  std::vector<Scalar> rhs;

  explicit LinearProgram(int vars)
      : num_vars(vars), objective(static_cast<std::size_t>(vars), Scalar(0)) {
    if (vars < 0) throw std::invalid_argument("LinearProgram: negative width");
  }

  void add_constraint(std::vector<Scalar> row, Relation rel, Scalar b) {
    if (static_cast<int>(row.size()) != num_vars)
      throw std::invalid_argument("LinearProgram: row width mismatch");
    rows.push_back(std::move(row));
    relations.push_back(rel);
    rhs.push_back(std::move(b));
  }
};

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Scalar objective{};      // c.x at the optimum; meaningless otherwise
  std::vector<Scalar> x;   // primal point; empty unless optimal
};

template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& lp) {
  const Scalar tol = LpTolerance<Scalar>::pivot();
  const int n = lp.num_vars;

  // Working copy with nonnegative right-hand sides.
  std::vector<std::vector<Scalar>> a = lp.rows;
  std::vector<Relation> rel = lp.relations;
  std::vector<Scalar> b = lp.rhs;
  int m = static_cast<int>(a.size());
  for (int i = 0; i < m; ++i) {
    if (b[std::size_t(i)] < Scalar(0)) {
      for (auto& v : a[std::size_t(i)]) v = -v;
      b[std::size_t(i)] = -b[std::size_t(i)];
      auto& r = rel[std::size_t(i)];
      r = (r == Relation::kLe) ? Relation::kGe
          : (r == Relation::kGe) ? Relation::kLe
                                 : Relation::kEq;
    }
  }

  // Column layout: structural | slack and surplus | artificial.
  int num_slack = 0, num_art = 0;
  for (Relation r : rel) {
    if (r != Relation::kEq) ++num_slack;
    if (r != Relation::kLe) ++num_art;
  }
  const int cols = n + num_slack + num_art;
  std::vector<std::vector<Scalar>> t(
      static_cast<std::size_t>(m),
      std::vector<Scalar>(static_cast<std::size_t>(cols), Scalar(0)));
  std::vector<Scalar> rhs_col = b;
  std::vector<int> basis(static_cast<std::size_t>(m), -1);
  std::vector<char> is_artificial(static_cast<std::size_t>(cols), 0);
  {
    int slack_at = n, art_at = n + num_slack;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) t[std::size_t(i)][std::size_t(j)] = a[std::size_t(i)][std::size_t(j)];
      switch (rel[std::size_t(i)]) {
        case Relation::kLe:
          t[std::size_t(i)][std::size_t(slack_at)] = Scalar(1);
          basis[std::size_t(i)] = slack_at++;
          break;
        case Relation::kGe:
          t[std::size_t(i)][std::size_t(slack_at)] = Scalar(-1);
          ++slack_at;
          t[std::size_t(i)][std::size_t(art_at)] = Scalar(1);
          is_artificial[std::size_t(art_at)] = 1;
          basis[std::size_t(i)] = art_at++;
          break;
        case Relation::kEq:
          t[std::size_t(i)][std::size_t(art_at)] = Scalar(1);
          is_artificial[std::size_t(art_at)] = 1;
          basis[std::size_t(i)] = art_at++;
          break;
      }
    }
  }

  auto pivot = [&](int prow, int pcol, std::vector<Scalar>& z, Scalar& zval) {
    Scalar p = t[std::size_t(prow)][std::size_t(pcol)];
    for (auto& v : t[std::size_t(prow)]) v /= p;
    rhs_col[std::size_t(prow)] /= p;
    t[std::size_t(prow)][std::size_t(pcol)] = Scalar(1);
    for (int i = 0; i < m; ++i) {
      if (i == prow) continue;
      Scalar f = t[std::size_t(i)][std::size_t(pcol)];
      if (f == Scalar(0)) continue;
      for (int j = 0; j < cols; ++j)
        t[std::size_t(i)][std::size_t(j)] -= f * t[std::size_t(prow)][std::size_t(j)];
      t[std::size_t(i)][std::size_t(pcol)] = Scalar(0);
      rhs_col[std::size_t(i)] -= f * rhs_col[std::size_t(prow)];
    }
    Scalar f = z[std::size_t(pcol)];
    if (f != Scalar(0)) {
      for (int j = 0; j < cols; ++j)
        z[std::size_t(j)] -= f * t[std::size_t(prow)][std::size_t(j)];
      z[std::size_t(pcol)] = Scalar(0);
      zval += f * rhs_col[std::size_t(prow)];
    }
    basis[std::size_t(prow)] = pcol;
  };

  // Reduced costs z[j] = c[j] - c_B . B^{-1} A_j, priced out from scratch.
  auto price_out = [&](const std::vector<Scalar>& cost, std::vector<Scalar>& z,
                       Scalar& zval) {
    z = cost;
    zval = Scalar(0);
    for (int i = 0; i < m; ++i) {
      const Scalar cb = cost[std::size_t(basis[std::size_t(i)])];
      if (cb == Scalar(0)) continue;
      for (int j = 0; j < cols; ++j)
        z[std::size_t(j)] -= cb * t[std::size_t(i)][std::size_t(j)];
      zval += cb * rhs_col[std::size_t(i)];
    }
  };

  // Returns false on unboundedness. `banned` columns never enter.
  auto run = [&](std::vector<Scalar>& z, Scalar& zval,
                 const std::vector<char>& banned) -> bool {
    const long cap = 4000L * (m + cols) + 4000;
    for (long iter = 0; iter <= cap; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (!banned[std::size_t(j)] && z[std::size_t(j)] > tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int i = 0; i < m; ++i) {
        if (t[std::size_t(i)][std::size_t(enter)] <= tol) continue;
        if (leave < 0) {
          leave = i;
          continue;
        }
        // Compare rhs_i / t_i vs rhs_l / t_l without dividing.
        Scalar lhs = rhs_col[std::size_t(i)] * t[std::size_t(leave)][std::size_t(enter)];
        Scalar rhs2 = rhs_col[std::size_t(leave)] * t[std::size_t(i)][std::size_t(enter)];
        if (lhs < rhs2 ||
            (lhs == rhs2 && basis[std::size_t(i)] < basis[std::size_t(leave)]))
          leave = i;
      }
      if (leave < 0) return false;
      pivot(leave, enter, z, zval);
    }
    throw std::runtime_error("solve_lp: iteration limit hit");
  };

  std::vector<Scalar> z;
  Scalar zval{};
  const std::vector<char> none(static_cast<std::size_t>(cols), 0);

  if (num_art > 0) {
    // Phase 1: maximise minus the artificial total; feasible iff it hits 0.
    std::vector<Scalar> cost1(static_cast<std::size_t>(cols), Scalar(0));
    for (int j = 0; j < cols; ++j)
      if (is_artificial[std::size_t(j)]) cost1[std::size_t(j)] = Scalar(-1);
    price_out(cost1, z, zval);
    run(z, zval, none);  // bounded above by zero, cannot be unbounded
    if (zval < -LpTolerance<Scalar>::feasibility()) return {LpStatus::kInfeasible, Scalar(0), {}};

    // Remove artificials from the basis; rows that will not budge are
    // redundant and get dropped.
    for (int i = m - 1; i >= 0; --i) {
      if (!is_artificial[std::size_t(basis[std::size_t(i)])]) continue;
      int pcol = -1;
      for (int j = 0; j < cols && pcol < 0; ++j) {
        if (is_artificial[std::size_t(j)]) continue;
        Scalar v = t[std::size_t(i)][std::size_t(j)];
        if (v > tol || v < -tol) pcol = j;
      }
      if (pcol >= 0) {
        pivot(i, pcol, z, zval);
      } else {
        t.erase(t.begin() + i);
        rhs_col.erase(rhs_col.begin() + i);
        basis.erase(basis.begin() + i);
        --m;
      }
    }
  }

  // Phase 2 over the real objective, artificial columns locked out.
  std::vector<Scalar> cost2(static_cast<std::size_t>(cols), Scalar(0));
  for (int j = 0; j < n; ++j)
    cost2[std::size_t(j)] =
        lp.maximize ? lp.objective[std::size_t(j)] : -lp.objective[std::size_t(j)];
  price_out(cost2, z, zval);
  if (!run(z, zval, is_artificial)) return {LpStatus::kUnbounded, Scalar(0), {}};

  LpSolution<Scalar> sol;
  sol.status = LpStatus::kOptimal;
  sol.x.assign(static_cast<std::size_t>(n), Scalar(0));
  for (int i = 0; i < m; ++i)
    if (basis[std::size_t(i)] < n) sol.x[std::size_t(basis[std::size_t(i)])] = rhs_col[std::size_t(i)];
  sol.objective = Scalar(0);
  for (int j = 0; j < n; ++j)
    sol.objective += lp.objective[std::size_t(j)] * sol.x[std::size_t(j)];
  return sol;
}

}  // namespace turangap
