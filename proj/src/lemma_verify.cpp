#include "turangap/lemma_verify.hpp"

#include <algorithm>
#include <cmath>

#include "turangap/errors.hpp"
#include "turangap/wheel.hpp"

namespace turangap {

double lll_s(double t, double delta) { return 3 + 3 * t - 4 * delta; }

double lll_gamma(double t, const LllParams& p) {
  double q = 2 * p.delta - 1;
  return (6 * t - 2 * q * q) / (9 + 9 * t - 12 * p.delta) - p.epsilon;
}

double lll_t_star(double delta) {
  double q = 31 - 32 * delta;
  return (q * q + 15) / 48;
}

double lll_g1(double gamma) {
  return (325 * gamma * gamma - 400 * gamma + 124) / 3;
}

double lll_r1(double t, double delta) {
  double u = 1 - delta;
  double s = lll_s(t, delta);
  double rad = 64 * u * u - s;
  return 0.5 * std::sqrt(s) / u / std::sqrt(rad) * (s - 2 * u);
}

namespace {

void require_params(const LllParams& p) {
  if (!(p.delta > 0.5 && p.delta < 1.0))
    throw GraphError("lll: delta must lie in (0.5, 1)");
  if (!(p.epsilon >= 0)) throw GraphError("lll: epsilon must be nonnegative");
  if (!(p.grid_step > 0)) throw GraphError("lll: grid step must be positive");
}

// Bisection for an increasing function crossing `target` on [lo, hi].
template <typename F>
double bisect_increasing(F f, double lo, double hi, double target) {
  if (!(f(lo) < target && f(hi) > target))
    throw GraphError("bisection: target not bracketed");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double lll_t_prime(const LllParams& p) {
  require_params(p);
  return bisect_increasing([&](double t) { return lll_gamma(t, p); },
                           p.delta / 3, 1.0, 8.0 / 13.0);
}

double lll_r1_root(double delta) {
  // r1 lives on s in (2(1-delta), 64(1-delta)^2), i.e. t strictly below
  // t_star, and increases there; the unit crossing sits below delta/3.
  double lo = (2 * delta - 1) / 3 + 1e-9;
  double hi = lll_t_star(delta) - 1e-9;
  return bisect_increasing([&](double t) { return lll_r1(t, delta); }, lo, hi,
                           1.0);
}

LllGridStats lll_grid_scan(const LllParams& p, bool use_openmp) {
  require_params(p);
  const double delta = p.delta, eps = p.epsilon, h = p.grid_step;
  const double t0 = delta / 3;
  const double u = 1 - delta;
  const double t_star = lll_t_star(delta);
  const long n = long((1.0 - t0) / h + 1e-9) + 1;

  LllGridStats st;
  double m1 = 1e300, m2 = 1e300, res = 0, rhs_min = 1e300, g1m = 1e300,
         qm = 1e300, dmin = 1e300, dmax = -1e300, fderr = 0, xerr = 0,
         slope = 1e300;

  auto visit = [&](double t, double& a1, double& a2, double& ares,
                   double& arhs, double& ag1, double& aq, double& admin,
                   double& admax, double& afd, double& ax, double& aslope) {
    double s = lll_s(t, delta);
    double g = lll_gamma(t, p);
    a1 = std::min(a1, g - 11.0 / 18.0);
    a2 = std::min(a2, 2 * t - g);

    // The product identity is exact along the curve; evaluate it in extended
    // precision so the residual measures the formulas, not double rounding.
    long double tl = t, dl = delta, el = eps;
    long double sl = 3.0L + 3.0L * tl - 4.0L * dl;
    long double ul = 1.0L - dl;
    long double gl = 2.0L / 3.0L - 8.0L * ul * ul / (3.0L * sl) - el;
    long double lin = 3.0L * gl - 4.0L * dl + 2.0L;
    long double lhs = (6.0L * tl - 3.0L * gl) * (2.0L - 3.0L * gl) - lin * lin;
    long double rhsl = 6.0L * sl * el;
    ares = std::max(ares, double(std::abs(lhs - rhsl) /
                                 std::max(std::abs(rhsl), 1e-15L)));
    arhs = std::min(arhs, double(rhsl));

    if (g <= 8.0 / 13.0) ag1 = std::min(ag1, t - lll_g1(g));

    double deriv = 8 * u * u / (s * s);
    admin = std::min(admin, deriv);
    admax = std::max(admax, deriv);
    double fd = (lll_gamma(t + h, p) - lll_gamma(t - h, p)) / (2 * h);
    afd = std::max(afd, std::abs(fd - deriv));

    if (t < t_star) {
      double c = 12 * g * g - 15.5 * g + 5;
      aq = std::min(aq, (t - g / 2) - c);
      double bracket = 32 * (s + 2 * delta - 2) * u * u + s * (64 * u * u - s);
      aslope = std::min(aslope, bracket);
      if (t < t_star - 1e-4) {
        // Same threshold two ways: the closed form against the direct
        // root of the quadratic at epsilon = 0.
        LllParams p0 = p;
        p0.epsilon = 0;
        double g0 = lll_gamma(t, p0);
        double c0 = 12 * g0 * g0 - 15.5 * g0 + 5;
        double direct = std::sqrt((t - g0 / 2) / c0);
        ax = std::max(ax, std::abs(lll_r1(t, delta) - direct) /
                              std::max(direct, 1e-15));
      }
    }
  };

#ifdef _OPENMP
#pragma omp parallel for if (use_openmp) schedule(static)                     \
    reduction(min : m1, m2, rhs_min, g1m, qm, dmin, slope)                    \
    reduction(max : res, dmax, fderr, xerr)
#endif
  for (long k = 0; k < n; ++k)
    visit(t0 + double(k) * h, m1, m2, res, rhs_min, g1m, qm, dmin, dmax,
          fderr, xerr, slope);
  st.points = n;
  if (t0 + double(n - 1) * h < 1.0 - 1e-12) {
    visit(1.0, m1, m2, res, rhs_min, g1m, qm, dmin, dmax, fderr, xerr, slope);
    ++st.points;
  }

  st.min_gamma_minus_lower = m1;
  st.min_two_t_minus_gamma = m2;
  st.max_identity_residual = res;
  st.min_identity_rhs = rhs_min;
  st.min_g1_margin = g1m;
  st.min_quadratic_margin = qm;
  st.min_dgamma_dt = dmin;
  st.max_dgamma_dt = dmax;
  st.max_dgamma_fd_error = fderr;
  st.max_r1_cross_error = xerr;
  st.min_r1_slope_bracket = slope;
  return st;
}

namespace {

// Grid margins certify the strict inequality only beyond the Lipschitz
// slack; a positive margin inside the slack is inconclusive, not a pass.
CheckResult margin_check(std::string claim, double margin, double slack) {
  CheckResult c = make_check(std::move(claim), margin, 0.0, slack,
                             CheckKind::kGreater);
  if (!c.pass && c.computed > 0) c.conclusive = false;
  return c;
}

CheckResult bool_check(std::string claim, bool ok) {
  return make_check(std::move(claim), ok ? 1.0 : 0.0, 1.0, 0.0,
                    CheckKind::kAbsDiff);
}

}  // namespace

LemmaReport verify_lll(const LllParams& p) {
  require_params(p);
  LemmaReport rep;
  rep.lemma = "threshold-curve";
  const double h = p.grid_step;
  const double delta = p.delta, u = 1 - p.delta;
  LllGridStats st = lll_grid_scan(p, true);

  rep.checks.push_back(make_check("gamma at range start within (0.6145, 0.6148)",
                                  lll_gamma(delta / 3, p), 0.61465, 0.00015,
                                  CheckKind::kInRange));
  rep.checks.push_back(margin_check("gamma stays above 11/18 on the grid",
                                    st.min_gamma_minus_lower, (8.0 / 9.0) * h / 2));
  rep.checks.push_back(margin_check("gamma stays below 2t on the grid",
                                    st.min_two_t_minus_gamma, 2 * h / 2));
  rep.checks.push_back(make_check(
      "product identity (6t-3g)(2-3g) - (3g-4d+2)^2 = 6*s*eps, relative residual",
      st.max_identity_residual, 0.0, 1e-9, CheckKind::kAbsDiff));
  rep.checks.push_back(margin_check("identity right side 6*s*eps stays positive",
                                    st.min_identity_rhs, 9 * p.epsilon * h));
  rep.checks.push_back(make_check("slope dgamma/dt stays at most 8/9",
                                  st.max_dgamma_dt, 8.0 / 9.0 + 1e-12, 0.0,
                                  CheckKind::kLess));
  rep.checks.push_back(make_check("slope dgamma/dt stays positive",
                                  st.min_dgamma_dt, 0.0, 0.0,
                                  CheckKind::kGreater));
  // Central differences carry a truncation error of max|gamma'''| h^2 / 6;
  // the third derivative peaks at the range start where s = 3(1-delta).
  double fd_tol = 1e-9 + 2 * (8.0 / (9 * u * u)) * h * h;
  rep.checks.push_back(make_check("slope formula matches finite differences",
                                  st.max_dgamma_fd_error, 0.0, fd_tol,
                                  CheckKind::kAbsDiff));

  double t_prime = lll_t_prime(p);
  rep.checks.push_back(make_check("t where gamma hits 8/13, within 0.3146+-0.0002",
                                  t_prime, 0.3146, 0.0002, CheckKind::kInRange));
  rep.checks.push_back(make_check("gamma hits 8/13 before the curvature cap t*",
                                  t_prime, lll_t_star(delta), 0.0,
                                  CheckKind::kLess));
  rep.checks.push_back(margin_check("t exceeds g1(gamma) while gamma <= 8/13",
                                    st.min_g1_margin, 2 * 4.0 * h / 2));
  rep.checks.push_back(make_check(
      "margin at range start: delta/3 - g1(gamma) within 0.0060+-0.0002",
      delta / 3 - lll_g1(lll_gamma(delta / 3, p)), 0.0060, 0.0002,
      CheckKind::kInRange));
  rep.checks.push_back(make_check(
      "margin at the 8/13 point: t' - g1(8/13) within 0.0069+-0.0002",
      t_prime - lll_g1(8.0 / 13.0), 0.0069, 0.0002, CheckKind::kInRange));

  rep.checks.push_back(margin_check(
      "closing quadratic unsolvable: (t - gamma/2) - c(gamma) positive below t*",
      st.min_quadratic_margin, 2 * h / 2));
  rep.checks.push_back(make_check("closed-form threshold exceeds 1 at range start",
                                  lll_r1(delta / 3, delta), 1.0, 0.0,
                                  CheckKind::kGreater));
  double root = lll_r1_root(delta);
  rep.checks.push_back(make_check("unit crossing of the threshold within 0.31379+-0.00005",
                                  root, 0.31379, 0.00005, CheckKind::kInRange));
  rep.checks.push_back(make_check("unit crossing sits below the range start",
                                  root, delta / 3, 0.0, CheckKind::kLess));
  rep.checks.push_back(make_check("threshold slope bracket stays positive",
                                  st.min_r1_slope_bracket, 0.0, 0.0,
                                  CheckKind::kGreater));
  rep.checks.push_back(make_check(
      "closed-form threshold matches the direct quadratic root at eps = 0",
      st.max_r1_cross_error, 0.0, 1e-9, CheckKind::kAbsDiff));

  double s_at_star = lll_s(lll_t_star(delta), delta);
  rep.checks.push_back(make_check("s at t* equals 64(1-delta)^2",
                                  s_at_star, 64 * u * u, 1e-12,
                                  CheckKind::kAbsDiff));
  return rep;
}

LemmaReport verify_condition_of_d(const Rational& gamma) {
  LemmaReport rep;
  rep.lemma = "wheel-ceilings";

  Rational l2 = wheel_gamma_limit(2), l3 = wheel_gamma_limit(3),
           l4 = wheel_gamma_limit(4);
  rep.checks.push_back(bool_check("feasibility limits are 5/8, 8/13, 11/18",
                                  l2 == Rational(5, 8) && l3 == Rational(8, 13) &&
                                      l4 == Rational(11, 18)));
  rep.checks.push_back(
      bool_check("limits are ordered 11/18 < 8/13 < 5/8", l4 < l3 && l3 < l2));

  rep.checks.push_back(bool_check(
      "d=3 ceiling at 8/13 equals 4/13",
      bound_general(3, Rational(8, 13)) == Rational(4, 13)));
  rep.checks.push_back(bool_check("d=2 sharp ceiling at 8/13 equals 53/169",
                                  bound_d2(Rational(8, 13)) == Rational(53, 169)));
  rep.checks.push_back(bool_check(
      "d=4 ceiling at 11/18 equals 11/36",
      bound_general(4, Rational(11, 18)) == Rational(11, 36)));

  // Specialised forms against the general polynomial at the input gamma.
  Rational g = gamma;
  rep.checks.push_back(bool_check(
      "general form minus d=2 sharp form is (8g-5)^2/3 at gamma",
      bound_general(2, g) - bound_d2(g) ==
          (Rational(8) * g - Rational(5)) * (Rational(8) * g - Rational(5)) /
              Rational(3)));
  rep.checks.push_back(bool_check(
      "d=3 specialisation matches (325g^2-400g+124)/3 at gamma",
      bound_general(3, g) ==
          (Rational(325) * g * g - Rational(400) * g + Rational(124)) /
              Rational(3)));
  rep.checks.push_back(bool_check(
      "d=4 specialisation matches (675g^2-825g+253)/3 at gamma",
      bound_general(4, g) ==
          (Rational(675) * g * g - Rational(825) * g + Rational(253)) /
              Rational(3)));

  for (int d = 2; d <= 4; ++d) {
    Rational limit = wheel_gamma_limit(d);
    rep.checks.push_back(bool_check(
        "d=" + std::to_string(d) + ": polytope feasible exactly up to its limit",
        wheel_feasible(d, limit) &&
            !wheel_feasible(d, limit + Rational(1, 1000))));
    bool feasible_here = g <= limit;
    rep.checks.push_back(bool_check(
        "d=" + std::to_string(d) +
            ": feasibility at gamma agrees with the closed-form limit",
        wheel_feasible(d, g) == feasible_here));
    if (feasible_here) {
      auto res = wheel_max(d, g, 32, 1);
      Rational cap = (d == 2) ? bound_d2(g) : bound_general(d, g);
      rep.checks.push_back(make_check(
          "d=" + std::to_string(d) + ": best search value stays under the ceiling",
          res.value, to_double(cap) + 1e-6, 0.0, CheckKind::kLess));
    }
  }
  return rep;
}

LemmaReport verify_general_upper(int r_max) {
  if (r_max < 4) throw GraphError("verify_general_upper requires r_max >= 4");
  LemmaReport rep;
  rep.lemma = "partite-threshold-closing";

  long bad_lhs = 0, bad_rhs = 0, bad_square = 0, bad_range = 0, bad_order = 0;
  Rational prev(0);
  bool increasing = true;
  for (int r = 4; r <= r_max; ++r) {
    Rational rr(r);
    Rational upper = (Rational(4) * (3 * r - 7) * (r - 1) + 1) /
                     (Rational(4) * (r - 2) * (3 * r - 4));
    Rational lhs2 = upper * (rr - 2) * (3 * rr - 4) -
                    (3 * rr - 7) * (rr - 1);
    Rational rhs = Rational(2) * (rr - 1) * (3 * rr - 4) *
                   ((Rational(1, 2) - upper) * (rr - 2) / (rr - 1) +
                    (3 * rr - 7) / (Rational(2) * (3 * rr - 4)));
    if (lhs2 != Rational(1, 4)) ++bad_lhs;
    if (rhs != Rational(1, 2)) ++bad_rhs;
    // Both sides nonnegative, so the root inequality squares cleanly.
    if (rhs < 0 || lhs2 < rhs * rhs) ++bad_square;
    if (!(upper > 0 && upper < 1)) ++bad_range;
    if (!(Rational(3 * r - 4, 3 * r - 1) < upper)) ++bad_order;
    if (r > 4 && !(upper > prev)) increasing = false;
    prev = upper;
  }

  auto count_check = [&](std::string claim, long bad) {
    rep.checks.push_back(make_check(std::move(claim), double(bad), 0.0, 0.0,
                                    CheckKind::kAbsDiff));
  };
  count_check("offending r with (delta(r-2)(3r-4) - (3r-7)(r-1)) != 1/4", bad_lhs);
  count_check("offending r with right side != 1/2", bad_rhs);
  count_check("offending r with squared closing inequality violated", bad_square);
  count_check("offending r with bound outside (0,1)", bad_range);
  count_check("offending r with (3r-4)/(3r-1) not below the bound", bad_order);

  rep.checks.push_back(bool_check(
      "r=4 bound equals 61/64 exactly",
      (Rational(4) * 5 * 3 + 1) / (Rational(4) * 2 * 8) == Rational(61, 64)));
  rep.checks.push_back(bool_check("r=4 lower threshold 8/11 below 61/64",
                                  Rational(8, 11) < Rational(61, 64)));
  // Recorded for context, deliberately never failing.
  rep.checks.push_back(make_check("bound sequence increases along r (recorded)",
                                  increasing ? 1.0 : 0.0, 1.0, 1e300,
                                  CheckKind::kAbsDiff));
  return rep;
}

LemmaReport verify_weak_bound(const std::vector<long long>& n_values) {
  LemmaReport rep;
  rep.lemma = "fallback-quadratic";

  for (long long n : n_values) {
    if (n <= 0) throw GraphError("verify_weak_bound requires positive n");
    Rational N = Rational(BigInt(n));
    std::string tag = "n=" + std::to_string(n) + ": ";
    auto q = [&](const Rational& a) {
      return N * a * a - Rational(12) * a - N / 4 - Rational(1);
    };
    Rational alpha_hi = Rational(1, 2) - Rational(27) / N;
    rep.checks.push_back(
        bool_check(tag + "alpha interval nonempty", alpha_hi > 0));
    rep.checks.push_back(bool_check(tag + "quadratic at 0 is -n/4-1 < 0",
                                    q(Rational(0)) == -N / 4 - 1 &&
                                        q(Rational(0)) < 0));
    // Two independent evaluations of the right endpoint.
    Rational endpoint = q(alpha_hi);
    rep.checks.push_back(bool_check(
        tag + "endpoint value equals 1053/n - 34",
        endpoint == Rational(1053) / N - Rational(34)));
    rep.checks.push_back(bool_check(tag + "endpoint value nonpositive",
                                    endpoint <= 0));
    // Upward parabola: the interval maximum sits at an endpoint.
    rep.checks.push_back(bool_check(
        tag + "quadratic nonpositive on the whole interval",
        alpha_hi > 0 && q(Rational(0)) <= 0 && endpoint <= 0));

    rep.checks.push_back(bool_check(
        tag + "threshold 12/13 n + 12/13 below 49/52 n + 1",
        Rational(12, 13) * N + Rational(12, 13) < Rational(49, 52) * N + 1));
    rep.checks.push_back(bool_check(
        tag + "threshold 159/169 n below 49/52 n + 1",
        Rational(159, 169) * N < Rational(49, 52) * N + 1));
    Rational worst = std::max(Rational(12, 13) * N + Rational(12, 13),
                              Rational(159, 169) * N);
    rep.checks.push_back(bool_check(
        tag + "max of both thresholds below 49/52 n + 1",
        worst < Rational(49, 52) * N + 1));
  }

  // Linear comparison a*n + b < c*n + d with c > a holds for all integers
  // n > (b-d)/(c-a); report the first safe n.
  auto crossover = [](const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d) {
    Rational boundary = (b - d) / (c - a);
    BigInt fl = numerator(boundary) / denominator(boundary);
    if (Rational(fl) > boundary) fl -= 1;  // floor for negatives
    long long first = (long long)fl + 1;
    return first < 0 ? 0LL : first;
  };
  long long c1 = crossover(Rational(12, 13), Rational(12, 13), Rational(49, 52),
                           Rational(1));
  long long c2 = crossover(Rational(159, 169), Rational(0), Rational(49, 52),
                           Rational(1));
  rep.checks.push_back(make_check("first n with both thresholds safely below",
                                  double(std::max(c1, c2)), 0.0, 0.0,
                                  CheckKind::kAbsDiff));
  return rep;
}

}  // namespace turangap
