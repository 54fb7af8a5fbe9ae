#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "regions.hpp"

namespace lightcone {

using HoloFn = std::function<cplx(const ComplexPoint2&)>;

// Right branch of the hyperbola with apex q = g ∩ d and asymptotes g (slope
// sigma through p) and d = {x0 = x1}:
//   K(t) = q + rho (e^t (sigma, 1) + e^{-t} (1, 1))
// shifted by alpha along (1,1)/sqrt2 and complexified in t.
struct CurveFamily {
  RealPoint2 p, s, q;
  double slope = 0, mu = 0, rho = 0;
  double t_lo = 0, t_hi = 0;  // working window
  double alpha_star = 0;      // beyond this shift the window lies in D'_{0,s}
  bool mirrored = false;      // built on the left boundary piece, x1 -> -x1

  RealPoint2 flip(RealPoint2 v) const { return mirrored ? RealPoint2{v.t, -v.x} : v; }
  ComplexPoint2 flip(ComplexPoint2 v) const { return mirrored ? ComplexPoint2{v.t, -v.x} : v; }

  ComplexPoint2 h(cplx w, double alpha) const {
    const cplx ep = std::exp(w), em = std::exp(-w);
    const double sh = alpha / std::numbers::sqrt2;
    ComplexPoint2 z{q.t + rho * (ep * slope + em) + sh, q.x + rho * (ep + em) + sh};
    return flip(z);
  }
  RealPoint2 K(double t, double alpha = 0) const { return h(t, alpha).re(); }
  RealPoint2 tangent(double t) const {
    return flip(RealPoint2{rho * (std::exp(t) * slope - std::exp(-t)), rho * (std::exp(t) - std::exp(-t))});
  }
};

// p must lie on the boundary of (D_{0,s})' and be spacelike; the line through p
// with the given slope must reach V_mu+, and so must every tangent of K in
// the window.
inline CurveFamily build_hyperbola_family(const RealPoint2& p, double slope, const RealPoint2& s, double mu,
                                          double half_window = 1.5) {
  require(std::isfinite(slope) && std::abs(slope) < 1, ErrorCode::BadGeometry, "slope magnitude must be < 1");
  require(std::isfinite(mu) && mu >= 0, ErrorCode::InvalidArgument, "mu must be >= 0");
  require(strictly_future({}, s), ErrorCode::InvalidArgument, "s must be forward timelike");
  require(mink_square(p) < -tau_class, ErrorCode::PreconditionFailed, "p must be spacelike");
  const UV up = to_uv(p), us = to_uv(s);
  const double tol = 1e-9 * (1 + norm(s));
  const bool right = std::abs(up.u - us.u) <= tol && up.v < 0;
  const bool left = std::abs(up.v - us.v) <= tol && up.u < 0;
  require(right || left, ErrorCode::PreconditionFailed, "p must lie on the boundary of (D_{0,s})'");

  CurveFamily f;
  f.mirrored = left;
  f.p = f.flip(p), f.s = f.flip(s), f.slope = slope, f.mu = mu;
  require(line_meets_mu_cone(f.p, {slope, 1}, mu), ErrorCode::BadGeometry, "line through p misses V_mu+");
  // q on d: p.t + l slope = p.x + l
  const double l = (f.p.t - f.p.x) / (1 - slope);
  f.q = f.p + l * RealPoint2{slope, 1};
  const RealPoint2 r = from_uv(to_uv(f.s).u, 0);  // vertex of D_{0,s} on d
  const RealPoint2 m = (1.0 / 3.0) * (f.p + f.q + r);
  const RealPoint2 dm = m - f.q;
  const double A = (dm.t - dm.x) / (slope - 1), B = dm.x - A;
  require(A > 0 && B > 0, ErrorCode::BadGeometry, "centroid of p, q, r is not between the asymptotes");
  f.rho = std::sqrt(A * B);
  const double tm = 0.5 * std::log(A / B);
  f.t_lo = tm - half_window, f.t_hi = tm + half_window;

  const Region dprime = SpacelikeComplementOfDoubleCone{{}, s};
  constexpr int n = 201;
  for (int i = 0; i < n; ++i) {
    const double t = f.t_lo + (f.t_hi - f.t_lo) * i / (n - 1);
    const RealPoint2 k = f.K(t);
    require(line_meets_mu_cone(k, f.tangent(t), mu), ErrorCode::BadGeometry,
            "a tangent of K misses V_mu+ inside the window");
    if (!contains(dprime, k)) f.alpha_star = std::max(f.alpha_star, boundary_distance(dprime, k));
  }
  return f;
}

// Closed contour in the parameter plane, uniformly parameterized: node k is
// c(theta_k) with theta_k = 2 pi k / N. The closing node is implicit.
struct Contour {
  std::vector<cplx> nodes;
  std::vector<cplx> dnodes;  // dc/dtheta at the nodes

  static Contour ellipse(cplx center, double a, double b, int n) {
    require(n >= 4 && a > 0 && b > 0, ErrorCode::InvalidArgument, "bad ellipse contour");
    Contour c;
    for (int k = 0; k < n; ++k) {
      const double th = 2 * std::numbers::pi * k / n;
      c.nodes.push_back(center + cplx(a * std::cos(th), b * std::sin(th)));
      c.dnodes.push_back(cplx(-a * std::sin(th), b * std::cos(th)));
    }
    return c;
  }
  std::size_t size() const { return nodes.size(); }
};

struct CauchyResult {
  cplx value;
  double error_estimate;  // |I_N - I_{N/2}|
};

// Trapezoidal Cauchy integral (1/2 pi i) ∮ f(rho)/(rho - target) d rho.
inline CauchyResult cauchy_continue(const std::vector<cplx>& f_on_contour, const Contour& w, cplx target) {
  const std::size_t n = w.size();
  require(n >= 4 && f_on_contour.size() == n, ErrorCode::InvalidArgument, "contour/value size mismatch");
  double spacing = 0, dmin = inf;
  for (std::size_t k = 0; k < n; ++k) {
    spacing = std::max(spacing, std::abs(w.nodes[(k + 1) % n] - w.nodes[k]));
    dmin = std::min(dmin, std::abs(w.nodes[k] - target));
  }
  require(dmin > spacing, ErrorCode::TargetTooClose, "target is within one node spacing of the contour");
  auto sum = [&](std::size_t stride) {
    cplx acc = 0;
    for (std::size_t k = 0; k < n; k += stride) acc += f_on_contour[k] * w.dnodes[k] / (w.nodes[k] - target);
    const double h = 2 * std::numbers::pi * stride / n;
    return acc * h / cplx(0, 2 * std::numbers::pi);
  };
  const cplx full = sum(1);
  const cplx half = (n % 2 == 0) ? sum(2) : full;
  return {full, std::abs(full - half)};
}

struct ContinuedPoint {
  double alpha, t;
  RealPoint2 point;
  cplx value;
  double error_estimate;
};

struct ContinuationOptions {
  int nodes = 256;
  int targets = 9;           // real targets across the window
  double height = 0.6;       // semi-axis of the contour in the imaginary direction
  double overhang = 0.35;    // contour extends this far beyond the window on each side
};

// Values of f on K_alpha(t) for t in the window, obtained only from f on a
// contour around the window.
inline std::vector<ContinuedPoint> continue_along_family(const HoloFn& f, const CurveFamily& fam,
                                                         const std::vector<double>& alpha_path,
                                                         const ContinuationOptions& opt = {}) {
  std::vector<ContinuedPoint> out;
  const double tc = 0.5 * (fam.t_lo + fam.t_hi), half = 0.5 * (fam.t_hi - fam.t_lo);
  const Contour w = Contour::ellipse(tc, half + opt.overhang, opt.height, opt.nodes);
  for (double alpha : alpha_path) {
    std::vector<cplx> vals(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) vals[k] = f(fam.h(w.nodes[k], alpha));
    for (int j = 0; j < opt.targets; ++j) {
      const double t = fam.t_lo + (fam.t_hi - fam.t_lo) * j / std::max(1, opt.targets - 1);
      auto r = cauchy_continue(vals, w, t);
      out.push_back({alpha, t, fam.K(t, alpha), r.value, r.error_estimate});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// maximum principle on an analytic disc patch over A_delta = {0 <= xi <= 1, |eta| < delta}

struct AnalyticPatch {
  std::function<ComplexPoint2(cplx)> map;
  double delta;
};

// Patch lambda -> h(t_lo + (t_hi - t_lo) lambda, alpha). delta is 0.1 times the
// smallest curvature radius of K over the window (in parameter units), capped.
inline AnalyticPatch patch_from_family(const CurveFamily& fam, double alpha) {
  double rmin = inf;
  constexpr int n = 101;
  for (int i = 0; i < n; ++i) {
    const double t = fam.t_lo + (fam.t_hi - fam.t_lo) * i / (n - 1);
    const double et = std::exp(t), emt = std::exp(-t);
    const RealPoint2 d1{fam.rho * (et * fam.slope - emt), fam.rho * (et - emt)};
    const RealPoint2 d2{fam.rho * (et * fam.slope + emt), fam.rho * (et + emt)};
    const double cross = std::abs(d1.t * d2.x - d1.x * d2.t);
    const double speed = norm(d1);
    if (cross > 0) rmin = std::min(rmin, speed * speed * speed / cross);
  }
  const double span = fam.t_hi - fam.t_lo;
  const double delta = std::min(0.25, 0.1 * rmin / span);
  return {[fam, alpha, span](cplx lam) { return fam.h(fam.t_lo + span * lam, alpha); }, delta};
}

struct MaxPrincipleReport {
  double interior_sup = 0;
  double boundary_sup = 0;
  bool pass = false;
};

inline MaxPrincipleReport max_principle_check(const AnalyticPatch& patch, const HoloFn& f, int grid = 41,
                                              double slack = 1e-9) {
  require(grid >= 3 && patch.delta > 0, ErrorCode::InvalidArgument, "bad patch grid");
  auto g = [&](cplx lam) { return std::abs(f(patch.map(lam))); };
  const double d = patch.delta;
  MaxPrincipleReport rep;
  // interior grid, strictly inside the rectangle
  for (int i = 1; i < grid - 1; ++i)
    for (int j = 1; j < grid - 1; ++j) {
      const cplx lam(double(i) / (grid - 1), -d + 2 * d * j / (grid - 1));
      rep.interior_sup = std::max(rep.interior_sup, g(lam));
    }
  // boundary: four sides, dense sampling then golden refinement at local maxima
  auto side = [&](cplx a, cplx b) {
    auto h = [&](double s) { return -g(a + s * (b - a)); };
    const int nb = 8 * grid;
    std::vector<double> v(nb + 1);
    for (int k = 0; k <= nb; ++k) v[k] = -h(double(k) / nb);
    double best = *std::max_element(v.begin(), v.end());
    for (int k = 0; k <= nb; ++k) {
      const bool peak = (k == 0 || v[k] >= v[k - 1]) && (k == nb || v[k] >= v[k + 1]);
      if (!peak) continue;
      auto [s, val] = golden_min(h, std::max(0.0, double(k - 1) / nb), std::min(1.0, double(k + 1) / nb), 60);
      best = std::max(best, -val);
    }
    return best;
  };
  const cplx c00(0, -d), c10(1, -d), c11(1, d), c01(0, d);
  rep.boundary_sup = std::max({side(c00, c10), side(c10, c11), side(c11, c01), side(c01, c00)});
  rep.pass = rep.interior_sup <= rep.boundary_sup + slack;
  return rep;
}

}  // namespace lightcone
