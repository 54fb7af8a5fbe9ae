#pragma once

#include <cmath>
#include <vector>

#include "regions.hpp"

namespace lightcone {

// (x', lambda): the quadric (x - x')^2 = lambda^2
struct HyperboloidParam {
  RealPoint2 xprime;
  double lambda;

  HyperboloidParam(RealPoint2 xp, double lam) : xprime(xp), lambda(lam) {
    require(std::isfinite(lam) && lam > 0, ErrorCode::InvalidArgument, "lambda must be > 0");
  }
};

// (x', a): the plane a (x - x') = 0 with causal normal a
struct PlaneParam {
  RealPoint2 xprime;
  RealPoint2 a;

  PlaneParam(RealPoint2 xp, RealPoint2 dir) : xprime(xp), a(dir) {
    require(norm(a) > tau_class && mink_square(a) >= -tau_class, ErrorCode::InvalidArgument,
            "plane normal must be causal and nonzero");
  }
};

struct SamplingConfig {
  std::size_t nsamples = 10000;
  std::uint64_t seed = default_seed;
  double radius = 1e3;
};

// ---------------------------------------------------------------------------
// closed forms

// Smallest admissible lambda for the shell {m1^2 < x^2 < m2^2, x0 > 0}, or inf
// when x' lies outside closure(V+).
inline double shell_lambda_bound(const RealPoint2& xprime, double m1, double m2) {
  if (!in_closed_forward(xprime)) return inf;
  const double alpha = std::sqrt(std::max(0.0, mink_square(xprime)));
  return std::max(m2 - alpha, alpha - m1);
}

// sup of (x - x')^2 over the closed double cone; the quadratic form is
// bilinear in (u, v) so the sup sits at a corner
inline double double_cone_sup_square(const RealPoint2& xprime, const DoubleCone& d) {
  UV a = to_uv(d.a), b = to_uv(d.b), q = to_uv(xprime);
  double best = -inf;
  for (double u : {a.u, b.u})
    for (double v : {a.v, b.v}) best = std::max(best, (u - q.u) * (v - q.v));
  return best;
}

// sup of a.x over a region, +inf when unbounded in that direction. Supports the
// regions for which the plane family is needed.
inline double plane_sup(const Region& r, const RealPoint2& a) {
  auto cone_sup = [&](double mu, const RealPoint2& apex) {
    if (!in_closed_backward(a)) return inf;
    return mink_dot(a, apex) - mu * std::sqrt(std::max(0.0, mink_square(a)));
  };
  if (auto* s = r.get_if<MuCone>()) return cone_sup(s->mu, s->apex);
  if (auto* s = r.get_if<ForwardCone>()) return cone_sup(0.0, s->apex);
  if (auto* s = r.get_if<HyperboloidShell>()) return cone_sup(s->m1, {});
  if (auto* s = r.get_if<DoubleCone>()) {
    UV ua = to_uv(s->a), ub = to_uv(s->b);
    double best = -inf;
    for (double u : {ua.u, ub.u})
      for (double v : {ua.v, ub.v}) best = std::max(best, mink_dot(a, from_uv(u, v)));
    return best;
  }
  if (auto* s = r.get_if<UnionOf>()) {
    double best = -inf;
    for (const auto& p : s->parts) best = std::max(best, plane_sup(p, a));
    return best;
  }
  fail(ErrorCode::UnsupportedRegion, std::string("no plane bound for ") + type_name(r));
}

// ---------------------------------------------------------------------------
// sampled universal checks

inline bool sampled_hyperboloid_check(const HyperboloidParam& h, const std::vector<RealPoint2>& samples) {
  const double l2 = h.lambda * h.lambda;
  for (const auto& x : samples)
    if (!(mink_square(x - h.xprime) < l2)) return false;
  return true;
}

inline bool sampled_plane_check(const PlaneParam& p, const std::vector<RealPoint2>& samples) {
  for (const auto& x : samples)
    if (!(mink_dot(p.a, x - p.xprime) < 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace detail {
inline bool is_bounded(const Region& r) {
  if (r.is<DoubleCone>() || r.is<ShellCap>()) return true;
  if (auto* u = r.get_if<UnionOf>()) {
    for (const auto& p : u->parts)
      if (!is_bounded(p)) return false;
    return true;
  }
  return false;
}
}  // namespace detail

inline bool is_admissible_hyperboloid(const HyperboloidParam& h, const Region& r, const SamplingConfig& cfg = {}) {
  require(cfg.nsamples >= 1, ErrorCode::InvalidArgument, "nsamples must be >= 1");
  // cones reach timelike infinity, so no hyperboloid can hold them
  if (r.is<MuCone>() || r.is<ForwardCone>() || r.is<BackwardCone>()) return false;
  if (auto* s = r.get_if<HyperboloidShell>()) return h.lambda >= shell_lambda_bound(h.xprime, s->m1, s->m2);
  if (auto* u = r.get_if<UnionOf>()) {
    for (const auto& p : u->parts)
      if (!is_admissible_hyperboloid(h, p, cfg)) return false;
    return true;
  }
  require(detail::is_bounded(r), ErrorCode::UnsupportedRegion,
          std::string("hyperboloid admissibility by sampling needs a bounded region, got ") + type_name(r));
  return sampled_hyperboloid_check(h, sample_interior(r, cfg.nsamples, cfg.seed, cfg.radius));
}

// Plane admissibility from the defining condition a (x - x') < 0 for all x.
// Cones use sup a.x = a.apex - mu sqrt(a^2) (never attained on the open cone);
// everything else is checked on samples.
inline bool is_admissible_plane(const PlaneParam& p, const Region& r, const SamplingConfig& cfg = {}) {
  if (r.is<MuCone>() || r.is<ForwardCone>()) {
    double sup = plane_sup(r, p.a);
    return std::isfinite(sup) && mink_dot(p.a, p.xprime) >= sup;
  }
  return sampled_plane_check(p, sample_interior(r, cfg.nsamples, cfg.seed, cfg.radius));
}

}  // namespace lightcone
