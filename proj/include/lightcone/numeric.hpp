#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace lightcone {

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Golden-section minimization on [a, b]. Returns (argmin, min).
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, int steps = 60) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < steps; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Grid scan over [a, b] with n points followed by golden refinement around the
// best grid cell. Robust enough for the piecewise-smooth objectives used here.
template <typename F>
std::pair<double, double> scan_min(F&& f, double a, double b, int n, int steps = 60) {
  int best = 0;
  double fbest = inf;
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    double v = f(a + h * i);
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  double lo = a + h * std::max(best - 1, 0), hi = a + h * std::min(best + 1, n - 1);
  auto [x, fx] = golden_min(f, lo, hi, steps);
  if (fx <= fbest) return {x, fx};
  return {a + h * best, fbest};
}

// Bisection for a sign change of f on [a, b]; f(a) and f(b) must differ in sign.
template <typename F>
double bisect(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
  double fa = f(a);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    double m = 0.5 * (a + b), fm = f(m);
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace lightcone
