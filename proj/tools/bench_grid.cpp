// Timing comparison between the serial reference paths and their OpenMP
// counterparts: the certification grid scan and the multi-start wheel
// ascent. The parallel code only reorders min/max reductions and
// independent restarts, so both must produce bitwise-identical results —
// the run doubles as an equality check and fails loudly on any mismatch.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "turangap/lemma_verify.hpp"
#include "turangap/rational.hpp"
#include "turangap/wheel.hpp"

using namespace turangap;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void expect_equal(double a, double b, const char* what) {
  if (a != b) {
    std::fprintf(stderr, "MISMATCH %s: %.17g vs %.17g\n", what, a, b);
    ++failures;
  }
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  double grid_step = argc > 1 ? std::atof(argv[1]) : 1e-6;
  int restarts = argc > 2 ? std::atoi(argv[2]) : 256;
  int threads = hardware_threads();
  if (const char* env = std::getenv("TURANGAP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) threads = n;
  }
  std::printf("threads available: %d\n", threads);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial s", "parallel s",
              "speedup");

  // certification grid scan
  LllParams p;
  p.grid_step = grid_step;
  auto t0 = Clock::now();
  LllGridStats serial = lll_grid_scan(p, false);
  double ts = seconds_since(t0);
  set_threads(threads);
  t0 = Clock::now();
  LllGridStats parallel = lll_grid_scan(p, true);
  double tp = seconds_since(t0);
  expect_equal(double(serial.points), double(parallel.points), "grid points");
  expect_equal(serial.min_gamma_minus_lower, parallel.min_gamma_minus_lower,
               "grid min_gamma_minus_lower");
  expect_equal(serial.min_two_t_minus_gamma, parallel.min_two_t_minus_gamma,
               "grid min_two_t_minus_gamma");
  expect_equal(serial.max_identity_residual, parallel.max_identity_residual,
               "grid max_identity_residual");
  expect_equal(serial.min_identity_rhs, parallel.min_identity_rhs,
               "grid min_identity_rhs");
  expect_equal(serial.min_g1_margin, parallel.min_g1_margin, "grid min_g1_margin");
  expect_equal(serial.min_quadratic_margin, parallel.min_quadratic_margin,
               "grid min_quadratic_margin");
  expect_equal(serial.min_dgamma_dt, parallel.min_dgamma_dt, "grid min_dgamma_dt");
  expect_equal(serial.max_dgamma_dt, parallel.max_dgamma_dt, "grid max_dgamma_dt");
  expect_equal(serial.max_dgamma_fd_error, parallel.max_dgamma_fd_error,
               "grid max_dgamma_fd_error");
  expect_equal(serial.max_r1_cross_error, parallel.max_r1_cross_error,
               "grid max_r1_cross_error");
  expect_equal(serial.min_r1_slope_bracket, parallel.min_r1_slope_bracket,
               "grid min_r1_slope_bracket");
  std::printf("%-34s %12.3f %12.3f %8.2fx   (%ld points)\n", "grid scan", ts,
              tp, ts / tp, serial.points);

  // multi-start wheel ascent, one (d, gamma) per wheel size
  for (int d = 2; d <= 4; ++d) {
    Rational gamma = wheel_gamma_limit(d) * 9 / 10;
    set_threads(1);
    t0 = Clock::now();
    WheelMaxResult one = wheel_max(d, gamma, restarts, 42);
    ts = seconds_since(t0);
    set_threads(threads);
    t0 = Clock::now();
    WheelMaxResult many = wheel_max(d, gamma, restarts, 42);
    tp = seconds_since(t0);
    expect_equal(one.value, many.value, "wheel value");
    expect_equal(one.min_neighborhood_sum, many.min_neighborhood_sum,
                 "wheel neighbourhood sum");
    for (std::size_t i = 0; i < one.x.size(); ++i)
      expect_equal(one.x[i], many.x[i], "wheel weight entry");
    std::string label = "wheel ascent d=" + std::to_string(d) + " (" +
                        std::to_string(restarts) + " restarts)";
    std::printf("%-34s %12.3f %12.3f %8.2fx\n", label.c_str(), ts, tp, ts / tp);
  }

  if (failures) {
    std::fprintf(stderr, "%d mismatches between serial and parallel runs\n",
                 failures);
    return 1;
  }
  std::printf("serial and parallel results identical\n");
  return 0;
}
