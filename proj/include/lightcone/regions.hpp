#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "minkowski.hpp"
#include "numeric.hpp"
#include "sampling.hpp"

namespace lightcone {

struct ForwardCone {
  RealPoint2 apex{};
};
struct BackwardCone {
  RealPoint2 apex{};
};
// apex + {x^2 > mu^2, x0 > 0}
struct MuCone {
  double mu = 0;
  RealPoint2 apex{};
};
// causal diamond (a + V+) ∩ (b + V-)
struct DoubleCone {
  RealPoint2 a, b;
};
// points spacelike to every point of DoubleCone{a, b}
struct SpacelikeComplementOfDoubleCone {
  RealPoint2 a, b;
};
// {x^2 < 0}
struct SpacelikeSet {};
// {x0 > 0, m1^2 < x^2 < m2^2}
struct HyperboloidShell {
  double m1, m2;
};
// shift + {x^2 < 0, x1 > 0}
struct Wedge {
  RealPoint2 shift{};
};
// {x in V-, 0 < x^2 < 1/m^2}
struct ShellCap {
  double m;
};

struct Region;
struct UnionOf {
  std::vector<Region> parts;
};

struct Region {
  using Shape = std::variant<ForwardCone, BackwardCone, MuCone, DoubleCone, SpacelikeComplementOfDoubleCone,
                             SpacelikeSet, HyperboloidShell, Wedge, ShellCap, UnionOf>;
  Shape shape;

  template <typename S>
    requires std::is_constructible_v<Shape, S>
  Region(S s) : shape(std::move(s)) {
    validate();
  }

  template <typename S>
  const S* get_if() const {
    return std::get_if<S>(&shape);
  }
  template <typename S>
  bool is() const {
    return std::holds_alternative<S>(shape);
  }

 private:
  void validate() const;
};

inline const char* type_name(const Region& r) {
  static constexpr const char* names[] = {"ForwardCone", "BackwardCone", "MuCone", "DoubleCone",
                                          "SpacelikeComplementOfDoubleCone", "SpacelikeSet",
                                          "HyperboloidShell", "Wedge", "ShellCap", "UnionOf"};
  return names[r.shape.index()];
}

inline bool strictly_future(const RealPoint2& a, const RealPoint2& b) {
  UV d = to_uv(b - a);
  return d.u > tau_class && d.v > tau_class;
}

inline void Region::validate() const {
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, MuCone>) {
          require(std::isfinite(s.mu) && s.mu >= 0, ErrorCode::InvalidArgument, "MuCone needs mu >= 0");
        } else if constexpr (std::is_same_v<S, DoubleCone> || std::is_same_v<S, SpacelikeComplementOfDoubleCone>) {
          require(strictly_future(s.a, s.b), ErrorCode::InvalidArgument, "double cone needs b in a + V+");
        } else if constexpr (std::is_same_v<S, HyperboloidShell>) {
          require(std::isfinite(s.m1) && std::isfinite(s.m2) && 0 < s.m1 && s.m1 < s.m2,
                  ErrorCode::InvalidArgument, "HyperboloidShell needs 0 < m1 < m2");
        } else if constexpr (std::is_same_v<S, ShellCap>) {
          require(std::isfinite(s.m) && s.m > 0, ErrorCode::InvalidArgument, "ShellCap needs m > 0");
        } else if constexpr (std::is_same_v<S, UnionOf>) {
          require(!s.parts.empty(), ErrorCode::InvalidArgument, "UnionOf needs at least one part");
        }
      },
      shape);
}

// ---------------------------------------------------------------------------
// uv boxes

struct UVBox {
  double u0 = -inf, u1 = inf, v0 = -inf, v1 = inf;

  bool contains(UV p, double tol = tau_class) const {
    return p.u > u0 + tol && p.u < u1 - tol && p.v > v0 + tol && p.v < v1 - tol;
  }
  // Euclidean distance from an interior point to the box boundary
  double depth(UV p) const {
    return std::min({p.u - u0, u1 - p.u, p.v - v0, v1 - p.v}) / std::numbers::sqrt2;
  }
  // Euclidean distance from an exterior point to the closed box
  double outside(UV p) const {
    double du = std::max({u0 - p.u, 0.0, p.u - u1});
    double dv = std::max({v0 - p.v, 0.0, p.v - v1});
    return std::hypot(du, dv) / std::numbers::sqrt2;
  }
};

namespace detail {

// regions that are a union of disjoint, mutually separated uv boxes
inline std::vector<UVBox> as_boxes(const Region& r) {
  if (auto* s = r.get_if<ForwardCone>()) {
    UV a = to_uv(s->apex);
    return {{a.u, inf, a.v, inf}};
  }
  if (auto* s = r.get_if<MuCone>(); s && s->mu == 0) {
    UV a = to_uv(s->apex);
    return {{a.u, inf, a.v, inf}};
  }
  if (auto* s = r.get_if<BackwardCone>()) {
    UV a = to_uv(s->apex);
    return {{-inf, a.u, -inf, a.v}};
  }
  if (auto* s = r.get_if<DoubleCone>()) {
    UV a = to_uv(s->a), b = to_uv(s->b);
    return {{a.u, b.u, a.v, b.v}};
  }
  if (auto* s = r.get_if<SpacelikeComplementOfDoubleCone>()) {
    // complement of closure(a+V+) ∪ closure(b+V-), intersected with the
    // spacelike-to-both condition: left piece u < ua, v > vb; right u > ub, v < va
    UV a = to_uv(s->a), b = to_uv(s->b);
    return {{-inf, a.u, b.v, inf}, {b.u, inf, -inf, a.v}};
  }
  if (r.is<SpacelikeSet>()) return {{-inf, 0, 0, inf}, {0, inf, -inf, 0}};
  if (auto* s = r.get_if<Wedge>()) {
    UV a = to_uv(s->shift);
    return {{a.u, inf, -inf, a.v}};
  }
  return {};
}

// distance from p to the branch {x^2 = c, x0 > 0}, c > 0
inline double dist_forward_hyperbola(const RealPoint2& p, double c) {
  const double r = std::sqrt(c);
  auto d2 = [&](double th) {
    double dt = p.t - r * std::cosh(th), dx = p.x - r * std::sinh(th);
    return dt * dt + dx * dx;
  };
  const double th0 = std::asinh(p.x / r);
  const double d0 = std::sqrt(d2(th0));
  const double lo = std::asinh((p.x - d0) / r), hi = std::asinh((p.x + d0) / r);
  if (!(hi > lo)) return d0;
  auto [th, v] = scan_min(d2, lo, hi, 257, 80);
  return std::sqrt(std::max(0.0, std::min(v, d0 * d0)));
}

// distance from (u, v) to the closed ray {u = 0, v <= 0}, in Euclidean units
inline double dist_ray_u0(UV p) { return (p.v <= 0 ? std::abs(p.u) : std::hypot(p.u, p.v)) / std::numbers::sqrt2; }
inline double dist_ray_v0(UV p) { return (p.u <= 0 ? std::abs(p.v) : std::hypot(p.u, p.v)) / std::numbers::sqrt2; }

}  // namespace detail

// Strict interior membership; the boundary band of width tau_class counts as outside.
inline bool contains(const Region& r, const RealPoint2& p) {
  if (auto boxes = detail::as_boxes(r); !boxes.empty()) {
    UV q = to_uv(p);
    return std::any_of(boxes.begin(), boxes.end(), [&](const UVBox& b) { return b.contains(q); });
  }
  if (auto* s = r.get_if<MuCone>()) {
    UV q = to_uv(p - s->apex);
    return q.u > 0 && q.v > 0 && q.u * q.v > s->mu * s->mu + tau_class;
  }
  if (auto* s = r.get_if<HyperboloidShell>()) {
    UV q = to_uv(p);
    double sq = q.u * q.v;
    return q.u > 0 && sq > s->m1 * s->m1 + tau_class && sq < s->m2 * s->m2 - tau_class;
  }
  if (auto* s = r.get_if<ShellCap>()) {
    UV q = to_uv(p);
    double sq = q.u * q.v;
    return q.u < -tau_class && q.v < -tau_class && sq < 1.0 / (s->m * s->m) - tau_class;
  }
  if (auto* s = r.get_if<UnionOf>()) {
    return std::any_of(s->parts.begin(), s->parts.end(), [&](const Region& q) { return contains(q, p); });
  }
  return false;
}

inline double boundary_distance(const Region& r, const RealPoint2& p);

namespace detail {

// Distance from p (inside the union) to the complement of the union, by
// sphere tracing along rays and minimizing the exit distance over directions.
inline double union_exit_distance(const UnionOf& un, const RealPoint2& p) {
  auto depth = [&](const RealPoint2& q) {
    double best = -1;
    for (const auto& part : un.parts)
      if (contains(part, q)) best = std::max(best, boundary_distance(part, q));
    return best;
  };
  constexpr double r_cap = 1e6;
  auto exit_along = [&](double ang) {
    RealPoint2 e{std::cos(ang), std::sin(ang)};
    double r = 0;
    for (int it = 0; it < 4000; ++it) {
      double d = depth(p + r * e);
      if (d < 1e-13) return r;
      r += d;
      if (r > r_cap) return r_cap;
    }
    return r;
  };
  auto [ang, dist] = scan_min(exit_along, 0.0, 2 * std::numbers::pi, 129, 50);
  return dist;
}

}  // namespace detail

// Euclidean distance to the boundary of r (0 on the boundary).
inline double boundary_distance(const Region& r, const RealPoint2& p) {
  if (auto boxes = detail::as_boxes(r); !boxes.empty()) {
    UV q = to_uv(p);
    for (const auto& b : boxes)
      if (b.contains(q, 0.0)) return b.depth(q);
    double best = inf;
    for (const auto& b : boxes) best = std::min(best, b.outside(q));
    return best;
  }
  if (auto* s = r.get_if<MuCone>()) return detail::dist_forward_hyperbola(p - s->apex, s->mu * s->mu);
  if (auto* s = r.get_if<HyperboloidShell>())
    return std::min(detail::dist_forward_hyperbola(p, s->m1 * s->m1), detail::dist_forward_hyperbola(p, s->m2 * s->m2));
  if (auto* s = r.get_if<ShellCap>()) {
    UV q = to_uv(p);
    return std::min({detail::dist_forward_hyperbola(-p, 1.0 / (s->m * s->m)), detail::dist_ray_u0(q),
                     detail::dist_ray_v0(q)});
  }
  const auto& un = std::get<UnionOf>(r.shape);
  bool inside = false;
  double best = inf;
  for (const auto& part : un.parts) {
    if (contains(part, p)) inside = true;
    best = std::min(best, boundary_distance(part, p));
  }
  if (!inside) return best;
  return detail::union_exit_distance(un, p);
}

// Membership in the Edge-of-the-Wedge thickening: some real x in r with
// |z - x| < dist(x, boundary)/32. Any witness lies within 33|im z| of re z,
// so we test re z plus a 64-point sunflower grid in that disc.
inline bool edge_neighborhood_contains(const Region& r, const ComplexPoint2& z, int grid = 64) {
  const RealPoint2 x0 = z.re();
  const double ny = norm(z.im());
  auto witness = [&](const RealPoint2& x) {
    if (!contains(r, x)) return false;
    double dx = norm(x - x0);
    return std::sqrt(dx * dx + ny * ny) < boundary_distance(r, x) / 32.0;
  };
  if (witness(x0)) return true;
  if (ny == 0) return false;
  const double radius = 33.0 * ny;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < grid; ++k) {
    double rho = radius * std::sqrt((k + 0.5) / grid), ang = k * golden_angle;
    if (witness(x0 + RealPoint2{rho * std::cos(ang), rho * std::sin(ang)})) return true;
  }
  return false;
}

struct GrowthEval {
  double delta;
  double delta_tilde;
};

// Pflug growth functions from the boundary distance and the point norm.
inline GrowthEval pflug_growth(double zdist, double znorm) {
  require(zdist > 0 && std::isfinite(zdist) && std::isfinite(znorm), ErrorCode::InvalidArgument,
          "pflug_growth needs zdist > 0");
  const double w = 1.0 / std::sqrt(1.0 + znorm * znorm);
  return {std::min(zdist, w), w * std::min(1.0, zdist)};
}

// Does the real line {P + s D} meet apex + V_mu+ ? (mu >= 0)
inline bool line_meets_mu_cone(const RealPoint2& P0, const RealPoint2& D, double mu, const RealPoint2& apex = {}) {
  const RealPoint2 P = P0 - apex;
  const double d2 = mink_square(D);
  if (d2 > tau_class) return true;  // timelike lines reach arbitrarily far into V+
  if (d2 >= -tau_class) {
    // lightlike: x^2 along the line is P^2 + 2s P.D, unbounded iff P.D != 0
    RealPoint2 Df = D.t >= 0 ? D : -D;
    return mink_dot(P, Df) > tau_class;
  }
  // spacelike: x^2 is maximal at s* = -P.D / D^2
  const double s = -mink_dot(P, D) / d2;
  const RealPoint2 X = P + s * D;
  return mink_square(X) > mu * mu + tau_class && X.t > 0;
}

// ---------------------------------------------------------------------------
// Deterministic interior sampling: half Halton points spread over a truncated
// version of the region, half hugging its finite boundary pieces.

namespace detail {

inline void sample_box(const UVBox& b0, std::size_t n, std::uint64_t seed, double radius, std::vector<RealPoint2>& out) {
  UVBox b = b0;
  const double w = 2 * radius;
  if (std::isinf(b.u0) && std::isinf(b.u1)) b.u0 = -w, b.u1 = w;
  else if (std::isinf(b.u0)) b.u0 = b.u1 - w;
  else if (std::isinf(b.u1)) b.u1 = b.u0 + w;
  if (std::isinf(b.v0) && std::isinf(b.v1)) b.v0 = -w, b.v1 = w;
  else if (std::isinf(b.v0)) b.v0 = b.v1 - w;
  else if (std::isinf(b.v1)) b.v1 = b.v0 + w;
  Halton h(seed), hb(seed ^ 0x9e3779b97f4a7c15ULL);
  const double inset = 1e-8;
  std::vector<int> edges;
  if (std::isfinite(b0.u0)) edges.push_back(0);
  if (std::isfinite(b0.u1)) edges.push_back(1);
  if (std::isfinite(b0.v0)) edges.push_back(2);
  if (std::isfinite(b0.v1)) edges.push_back(3);
  const std::size_t n_edge = edges.empty() ? 0 : n / 2;
  for (std::size_t i = 0; i < n - n_edge; ++i) {
    double u = b.u0 + (b.u1 - b.u0) * (0.001 + 0.998 * h.coord(i, 0));
    double v = b.v0 + (b.v1 - b.v0) * (0.001 + 0.998 * h.coord(i, 1));
    out.push_back(from_uv(u, v));
  }
  for (std::size_t i = 0; i < n_edge; ++i) {
    int e = edges[i % edges.size()];
    double s = hb.coord(i, 0);
    double u = b.u0 + (b.u1 - b.u0) * (1e-6 + (1 - 2e-6) * s);
    double v = b.v0 + (b.v1 - b.v0) * (1e-6 + (1 - 2e-6) * s);
    switch (e) {
      case 0: u = b.u0 + inset; break;
      case 1: u = b.u1 - inset; break;
      case 2: v = b.v0 + inset; break;
      default: v = b.v1 - inset; break;
    }
    out.push_back(from_uv(u, v));
  }
}

// points apex + sign * rho (cosh th, sinh th) with rho in (r0, r1)
inline void sample_hyperbolic(double r0, double r1, double sign, const RealPoint2& apex, bool hug_inner, bool hug_outer,
                              std::size_t n, std::uint64_t seed, double radius, std::vector<RealPoint2>& out) {
  Halton h(seed);
  const double rref = std::max(r0, 1e-3);
  const double th_max = std::min(12.0, std::asinh(radius / rref));
  const double inset = 1e-8;
  const std::size_t n_edge = (hug_inner || hug_outer) ? n / 2 : 0;
  auto emit = [&](double rho, double th) {
    out.push_back(apex + sign * RealPoint2{rho * std::cosh(th), rho * std::sinh(th)});
  };
  for (std::size_t i = 0; i < n - n_edge; ++i) {
    double rho = r0 + (r1 - r0) * (0.001 + 0.998 * h.coord(i, 0));
    emit(rho, th_max * (2 * h.coord(i, 1) - 1));
  }
  for (std::size_t i = 0; i < n_edge; ++i) {
    bool inner = hug_inner && (!hug_outer || i % 2 == 0);
    // clear the tau band on x^2 that contains() applies
    double rho = inner ? std::sqrt(r0 * r0 + 4 * tau_class) * (1 + inset)
                       : std::sqrt(std::max(0.0, r1 * r1 - 4 * tau_class)) * (1 - inset);
    emit(rho, th_max * (2 * h.coord(i + n, 1) - 1));
  }
}

}  // namespace detail

inline std::vector<RealPoint2> sample_interior(const Region& r, std::size_t n, std::uint64_t seed = default_seed,
                                               double radius = 10.0) {
  std::vector<RealPoint2> out;
  out.reserve(n);
  if (auto boxes = detail::as_boxes(r); !boxes.empty()) {
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      std::size_t nk = n / boxes.size() + (k < n % boxes.size() ? 1 : 0);
      detail::sample_box(boxes[k], nk, seed + k, radius, out);
    }
  } else if (auto* s = r.get_if<MuCone>()) {
    detail::sample_hyperbolic(s->mu, s->mu + radius, 1.0, s->apex, true, false, n, seed, radius, out);
  } else if (auto* s = r.get_if<HyperboloidShell>()) {
    detail::sample_hyperbolic(s->m1, s->m2, 1.0, {}, true, true, n, seed, radius, out);
  } else if (auto* s = r.get_if<ShellCap>()) {
    detail::sample_hyperbolic(1e-6, 1.0 / s->m, -1.0, {}, false, true, n, seed, radius, out);
  } else {
    const auto& un = std::get<UnionOf>(r.shape);
    for (std::size_t k = 0; k < un.parts.size(); ++k) {
      std::size_t nk = n / un.parts.size() + (k < n % un.parts.size() ? 1 : 0);
      auto part = sample_interior(un.parts[k], nk, seed + 7919 * (k + 1), radius);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  // drop anything the tolerance band rejects (only possible for huge coordinates)
  std::erase_if(out, [&](const RealPoint2& p) { return !contains(r, p); });
  return out;
}

}  // namespace lightcone
