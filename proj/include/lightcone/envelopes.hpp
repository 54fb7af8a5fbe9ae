#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "admissible.hpp"
#include "regions.hpp"
#include "transforms.hpp"

namespace lightcone {

inline constexpr double tol_env_closed = 1e-9;
inline constexpr double tol_env_search = 1e-6;

enum class Verdict { Inside, Excluded, Boundary };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Excluded: return "excluded";
    case Verdict::Boundary: return "boundary";
  }
  return "?";
}

// margin > 0 means inside; Boundary when |margin| <= tol
struct EnvelopeVerdict {
  Verdict kind;
  double margin;
};

inline EnvelopeVerdict decide(double margin, double tol) {
  if (std::abs(margin) <= tol) return {Verdict::Boundary, margin};
  return {margin > 0 ? Verdict::Inside : Verdict::Excluded, margin};
}

struct SearchBudget {
  int grid = 64;          // coarse grid per axis
  int refine = 40;        // golden-section steps
  double lambda_max = 1e4;
  double theta_max = 10;  // rapidity range for real-point searches
  double tol = tol_env_search;
};

namespace detail {

// signed distance to the boundary of g, positive inside
inline double signed_distance(const Region& g, const RealPoint2& x) {
  double d = boundary_distance(g, x);
  return contains(g, x) ? d : -d;
}

inline double lightlike_rule_margin(const RealPoint2& x, const RealPoint2& y) {
  return x.t - x.x * sgn(y.t) * sgn(y.x);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// closed forms

// Envelope of the mu-cone thickening plus both tubes.
inline EnvelopeVerdict envelope_mu_cone(const ComplexPoint2& z, double mu, double tol = tol_env_closed) {
  require(std::isfinite(mu) && mu >= 0, ErrorCode::InvalidArgument, "mu must be >= 0");
  const RealPoint2 x = z.re(), y = z.im();
  const CausalClass c = classify(y);
  if (is_timelike(c)) return {Verdict::Inside, std::sqrt(mink_square(y))};
  if (c == CausalClass::Zero) return decide(detail::signed_distance(MuCone{mu, {}}, x), tol);
  if (is_lightlike(c)) return decide(detail::lightlike_rule_margin(x, y), tol);
  return decide(mink_dot(x, hat_dual(y)) - mu, tol);
}

struct G1Bounds {
  double f_minus, f_plus;
};

// F-(x1, y) < x0 < F+(x1, y) for -k^2 < y^2 < 0, k = (m2 - m1)/2
inline G1Bounds g1_bounds(double x1, const RealPoint2& y, double m1, double m2) {
  const double k = (m2 - m1) / 2, K = (m2 + m1) / 2;
  const double q = k * k + mink_square(y);
  require(q >= 0, ErrorCode::PreconditionFailed, "F bounds need -((m2-m1)/2)^2 < y^2");
  const RealPoint2 yh = hat_dual(y);
  const double s = std::sqrt(q);
  return {-yh.t * s + std::hypot(K, x1 + yh.x * s), yh.t * s + std::hypot(K, x1 - yh.x * s)};
}

inline EnvelopeVerdict envelope_g1(const ComplexPoint2& z, double m1, double m2, double tol = tol_env_closed) {
  require(std::isfinite(m1) && std::isfinite(m2) && 0 < m1 && m1 < m2, ErrorCode::InvalidArgument,
          "envelope_g1 needs 0 < m1 < m2");
  const RealPoint2 x = z.re(), y = z.im();
  const CausalClass c = classify(y);
  if (is_timelike(c)) return {Verdict::Inside, std::sqrt(mink_square(y))};
  if (c == CausalClass::Zero) return decide(detail::signed_distance(HyperboloidShell{m1, m2}, x), tol);
  if (is_lightlike(c)) return decide(detail::lightlike_rule_margin(x, y), tol);
  const double k = (m2 - m1) / 2;
  const double q = mink_square(y) + k * k;
  if (q <= tol) return decide(q, tol);
  const G1Bounds f = g1_bounds(x.x, y, m1, m2);
  return decide(std::min(x.t - f.f_minus, f.f_plus - x.t), tol);
}

// Complement of {z : z^2 = rho, 0 <= rho <= m^2}. Points within tol of the
// endpoints rho = 0, m^2 are reported as Boundary.
inline EnvelopeVerdict envelope_shell_complement(const ComplexPoint2& z, double m, double tol = tol_env_closed) {
  require(std::isfinite(m) && m > 0, ErrorCode::InvalidArgument, "m must be > 0");
  const cplx w = mink_square(z);
  const double m2 = m * m;
  const double re = w.real(), im = w.imag();
  const double along = std::clamp(re, 0.0, m2);
  const double d = std::hypot(re - along, im);
  if (d > tol) return {Verdict::Inside, d};
  const double to_end = std::min(std::abs(re), std::abs(re - m2));
  if (to_end <= tol) return {Verdict::Boundary, d};
  return {Verdict::Excluded, -to_end};
}

// ---------------------------------------------------------------------------
// generic search over admissible quadrics and planes

namespace detail {

struct JldSupport {
  bool hyperboloids = true;  // false once an unbounded cone is present
};

inline void check_jld_region(const Region& r, JldSupport& sup) {
  if (r.is<HyperboloidShell>() || r.is<DoubleCone>()) return;
  if (r.is<MuCone>() || r.is<ForwardCone>()) {
    sup.hyperboloids = false;
    return;
  }
  if (auto* u = r.get_if<UnionOf>()) {
    for (const auto& p : u->parts) check_jld_region(p, sup);
    return;
  }
  fail(ErrorCode::UnsupportedRegion, std::string("jld_excluded does not handle ") + type_name(r));
}

// >= 0 iff (x', lambda) is admissible; in units of lambda
inline double hyperboloid_slack(const Region& r, const RealPoint2& xp, double lambda) {
  if (auto* s = r.get_if<HyperboloidShell>()) {
    // outside closure(V+) nothing is admissible; stay continuous with the
    // alpha = 0 bound lambda >= m2 on the light cone
    const double cone = xp.t - std::abs(xp.x);
    if (cone < 0) return std::min(cone, lambda - s->m2);
    const double alpha = std::sqrt(std::max(0.0, mink_square(xp)));
    return lambda - std::max(s->m2 - alpha, alpha - s->m1);
  }
  if (auto* s = r.get_if<DoubleCone>()) return lambda - std::sqrt(std::max(0.0, double_cone_sup_square(xp, *s)));
  double best = inf;
  for (const auto& p : std::get<UnionOf>(r.shape).parts) best = std::min(best, hyperboloid_slack(p, xp, lambda));
  return best;
}

// >= 0 iff a plane with normal +-n through x is admissible (either orientation)
inline double plane_slack(const Region& r, const RealPoint2& x, RealPoint2 n) {
  n = n / norm(n);
  const double s1 = mink_dot(n, x) - plane_sup(r, n);
  const double s2 = mink_dot(-n, x) - plane_sup(r, -n);
  return std::max(s1, s2);
}

inline double best_plane_slack_real(const Region& r, const RealPoint2& x, const SearchBudget& b) {
  double best = -inf;
  for (RealPoint2 n : {RealPoint2{1, 1}, RealPoint2{1, -1}}) best = std::max(best, plane_slack(r, x, n));
  auto f = [&](double eta) { return -plane_slack(r, x, {std::cosh(eta), std::sinh(eta)}); };
  auto [eta, v] = scan_min(f, -b.theta_max, b.theta_max, b.grid * b.grid, b.refine);
  return std::max(best, -v);
}

inline double best_hyperboloid_slack_spacelike(const Region& r, const RealPoint2& x, const RealPoint2& y,
                                               const SearchBudget& b) {
  // x - x' must be orthogonal to y, hence kappa * y^; then lambda^2 = kappa^2 - y^2
  const RealPoint2 yh = hat_dual(y);
  const double y2 = mink_square(y);
  auto f = [&](double s) {
    const double kappa = std::sinh(s);
    const double lambda = std::sqrt(kappa * kappa - y2);
    return -hyperboloid_slack(r, x - kappa * yh, lambda);
  };
  const double smax = std::asinh(b.lambda_max);
  auto [s, v] = scan_min(f, -smax, smax, b.grid * b.grid, b.refine);
  return -v;
}

inline double best_hyperboloid_slack_real(const Region& r, const RealPoint2& x, const SearchBudget& b) {
  // x - x' = sigma lambda (cosh th, sinh th)
  const double llo = std::log(1e-6), lhi = std::log(b.lambda_max);
  double best = -inf;
  for (double sigma : {1.0, -1.0}) {
    auto f = [&](double ll, double th) {
      const double lambda = std::exp(ll);
      return hyperboloid_slack(r, x - sigma * lambda * RealPoint2{std::cosh(th), std::sinh(th)}, lambda);
    };
    double bl = llo, bt = 0, bv = -inf;
    const double hl = (lhi - llo) / (b.grid - 1), ht = 2 * b.theta_max / (b.grid - 1);
    for (int i = 0; i < b.grid; ++i)
      for (int j = 0; j < b.grid; ++j) {
        double ll = llo + hl * i, th = -b.theta_max + ht * j;
        double v = f(ll, th);
        if (v > bv) bv = v, bl = ll, bt = th;
      }
    // alternating golden refinement inside the best cell's neighbourhood
    double wl = hl, wt = ht;
    for (int pass = 0; pass < 4; ++pass) {
      auto [l2, v1] = golden_min([&](double ll) { return -f(ll, bt); }, bl - wl, bl + wl, b.refine);
      if (-v1 > bv) bv = -v1, bl = l2;
      auto [t2, v2] = golden_min([&](double th) { return -f(bl, th); }, bt - wt, bt + wt, b.refine);
      if (-v2 > bv) bv = -v2, bt = t2;
      wl /= 2, wt /= 2;
    }
    best = std::max(best, bv);
  }
  return best;
}

}  // namespace detail

// Search for an admissible quadric (or plane) through z. Excluded when one is
// found; the margin is minus the best admissibility slack.
inline EnvelopeVerdict jld_excluded(const ComplexPoint2& z, const Region& r, const SearchBudget& budget = {}) {
  detail::JldSupport sup;
  detail::check_jld_region(r, sup);
  const RealPoint2 x = z.re();
  RealPoint2 y = z.im();
  CausalClass c = classify(y);
  if (is_timelike(c)) return {Verdict::Inside, std::sqrt(mink_square(y))};
  if (c == CausalClass::Zero) {
    double best = detail::best_plane_slack_real(r, x, budget);
    if (sup.hyperboloids) best = std::max(best, detail::best_hyperboloid_slack_real(r, x, budget));
    return decide(-best, budget.tol);
  }
  if (is_lightlike(c)) {
    // no quadric passes through a lightlike imaginary part; the excluded set is
    // closed, so evaluate the limit from the spacelike side
    const double delta = std::max(1e-4 * norm(y), 1e-4);
    y = RealPoint2{y.t, y.x + (y.x >= 0 ? delta : -delta)};
  }
  double best = detail::plane_slack(r, x, hat_dual(y));
  if (sup.hyperboloids) best = std::max(best, detail::best_hyperboloid_slack_spacelike(r, x, y, budget));
  return decide(-best, budget.tol);
}

// ---------------------------------------------------------------------------
// rule-based verdicts

// A non-real point a + (t + i tau) y on a line meeting a cone-like region.
inline EnvelopeVerdict line_point_in_envelope(const RealPoint2& a, const RealPoint2& y, double t, double tau,
                                              const Region& r) {
  require(norm(y) > tau_class, ErrorCode::PreconditionFailed, "direction y must be nonzero");
  require(tau != 0, ErrorCode::PreconditionFailed, "tau must be nonzero");
  double mu = 0;
  RealPoint2 apex{};
  if (auto* s = r.get_if<MuCone>()) mu = s->mu, apex = s->apex;
  else if (auto* s = r.get_if<ForwardCone>()) apex = s->apex;
  else fail(ErrorCode::UnsupportedRegion, "line rule needs a region with r + V+ = r (MuCone, ForwardCone)");
  require(line_meets_mu_cone(a, y, mu, apex), ErrorCode::PreconditionFailed, "the real line misses the region");
  const ComplexPoint2 z = make_complex(a + t * y - apex, tau * y);
  return envelope_mu_cone(z, mu);
}

namespace detail {
inline const Wedge& require_wedge(const Region& r) {
  auto* w = r.get_if<Wedge>();
  require(w != nullptr, ErrorCode::UnsupportedRegion, "rule needs a Wedge region");
  return *w;
}
}  // namespace detail

// Non-real points on (z - z~)^2 = mparam with the center on a lightlike line
// meeting the closed wedge.
inline EnvelopeVerdict wedge_hyperbola_membership(const ComplexPoint2& z, const RealPoint2& ztilde, double mparam,
                                                  const Region& r, double tol = tol_env_closed) {
  const Wedge& w = detail::require_wedge(r);
  require(norm(z.im()) > tau_class, ErrorCode::PreconditionFailed, "z must not be real");
  const UV s = to_uv(w.shift), c = to_uv(ztilde);
  const bool on_line = c.v <= s.v + tau_class || c.u >= s.u - tau_class;
  require(on_line, ErrorCode::PreconditionFailed, "center is not on a lightlike line meeting the wedge");
  const bool in_closure = c.u >= s.u - tau_class && c.v <= s.v + tau_class;
  require(in_closure ? mparam != 0 : mparam < 0, ErrorCode::PreconditionFailed,
          in_closure ? "mparam must be nonzero" : "mparam must be negative for centers outside the wedge");
  const double residual = std::abs(mink_square(z - ComplexPoint2(ztilde)) - cplx(mparam));
  require(residual <= tol * (1 + std::abs(mparam)), ErrorCode::PreconditionFailed,
          "z does not lie on the hyperbola");
  return {Verdict::Inside, norm(z.im())};
}

// a + (t + i tau) b with lightlike b and the real line meeting the closed wedge
inline EnvelopeVerdict wedge_lightlike_line_point(const RealPoint2& a, const RealPoint2& b, double t, double tau,
                                                  const Region& r) {
  const Wedge& w = detail::require_wedge(r);
  require(norm(b) > tau_class && std::abs(mink_square(b)) <= tau_class * std::max(1.0, norm(b) * norm(b)),
          ErrorCode::PreconditionFailed, "b must be lightlike");
  require(tau != 0, ErrorCode::PreconditionFailed, "tau must be nonzero");
  const UV s = to_uv(w.shift), p = to_uv(a);
  // b along (1,1) keeps v fixed, b along (1,-1) keeps u fixed
  const bool meets = (b.t * b.x > 0) ? p.v <= s.v + tau_class : p.u >= s.u - tau_class;
  require(meets, ErrorCode::PreconditionFailed, "the real line misses the closed wedge");
  (void)t;
  return {Verdict::Inside, std::abs(tau) * norm(b)};
}

// Non-real points of (z - x~)^2 = (b - x~)^2 for x~ in the upper half of D_{a,b}.
inline EnvelopeVerdict double_cone_quadric_membership(const ComplexPoint2& z, const RealPoint2& xtilde,
                                                      const RealPoint2& a, const RealPoint2& b,
                                                      double tol = tol_env_closed) {
  require(norm(z.im()) > tau_class, ErrorCode::PreconditionFailed, "z must not be real");
  require(contains(DoubleCone{a, b}, xtilde), ErrorCode::PreconditionFailed, "x~ must lie in D_{a,b}");
  require(mink_square(xtilde - a) > mink_square(xtilde - b), ErrorCode::PreconditionFailed,
          "x~ must lie in the upper half, (x~-a)^2 > (x~-b)^2");
  const double target = mink_square(b - xtilde);
  const double residual = std::abs(mink_square(z - ComplexPoint2(xtilde)) - cplx(target));
  require(residual <= tol * (1 + std::abs(target)), ErrorCode::PreconditionFailed, "z does not lie on the quadric");
  return {Verdict::Inside, tol - residual};
}

// ---------------------------------------------------------------------------
// D^ construction for apex + V_mu+ and a double cone D_{a,b}

struct DhatPiece {
  enum class Kind { SegmentFuture, RayPast } kind;
  RealPoint2 p0;   // segment start / ray start
  RealPoint2 p1;   // segment end / ray direction
  RealPoint2 cap;  // SegmentFuture: intersect cap + V-; RayPast: intersect cap + V+
};

struct DhatRegion {
  RealPoint2 a, b;
  double mu = 0;
  RealPoint2 apex{};
  std::vector<DhatPiece> pieces;
  bool degenerate = true;  // D^ = D
  std::optional<RealPoint2> contact_a, contact_b;
};

namespace detail {

// exists s in [lo, hi] with coef_i * s < rhs_i for all i
inline bool feasible_interval(std::initializer_list<std::pair<double, double>> cons, double lo, double hi) {
  for (auto [coef, rhs] : cons) {
    if (coef > 0) hi = std::min(hi, rhs / coef);
    else if (coef < 0) lo = std::max(lo, rhs / coef);
    else if (!(rhs > 0)) return false;
  }
  return lo < hi;
}

// Tangency parameters u with q0 cosh u - q1 sinh u = mu for q relative to the apex.
inline std::vector<double> tangency_roots(const RealPoint2& q, double mu) {
  const UV w = to_uv(q);
  std::vector<double> roots;
  // (q0 - q1) e^{2u} - 2 mu e^u + (q0 + q1) = 0
  if (std::abs(w.v) < 1e-14) {
    if (mu > 0 && w.u / (2 * mu) > 0) roots.push_back(std::log(w.u / (2 * mu)));
    return roots;
  }
  const double disc = mu * mu - w.u * w.v;
  if (disc < 0) return roots;
  for (double sgn_ : {1.0, -1.0}) {
    double e = (mu + sgn_ * std::sqrt(disc)) / w.v;
    if (e > 0) roots.push_back(std::log(e));
  }
  if (roots.size() == 2 && std::abs(roots[0] - roots[1]) < 1e-14) roots.pop_back();
  return roots;
}

}  // namespace detail

inline bool dhat_contains(const DhatRegion& d, const RealPoint2& p) {
  if (contains(DoubleCone{d.a, d.b}, p)) return true;
  const UV x = to_uv(p);
  const double t = tau_class;
  for (const auto& piece : d.pieces) {
    const bool seg = piece.kind == DhatPiece::Kind::SegmentFuture;
    const UV p0 = to_uv(piece.p0), dir = to_uv(seg ? piece.p1 - piece.p0 : piece.p1);
    const UV cap = to_uv(piece.cap);
    if (seg) {
      if (!(x.u < cap.u - t && x.v < cap.v - t)) continue;
      // x in q(s) + V+ for some q(s) = p0 + s (p1 - p0), s in [0, 1]
      if (detail::feasible_interval({{dir.u, x.u - p0.u - t}, {dir.v, x.v - p0.v - t}}, 0.0, 1.0)) return true;
    } else {
      if (!(x.u > cap.u + t && x.v > cap.v + t)) continue;
      // x in q(s) + V- for some q(s) = p0 + s dir, s >= 0
      if (detail::feasible_interval({{-dir.u, p0.u - x.u - t}, {-dir.v, p0.v - x.v - t}}, 0.0, inf)) return true;
    }
  }
  return false;
}

// Tangent lines from the vertices to apex + V_mu+ and the resulting pieces.
inline DhatRegion dhat(const RealPoint2& a, const RealPoint2& b, double mu, const RealPoint2& apex = {}) {
  require(std::isfinite(mu) && mu >= 0, ErrorCode::InvalidArgument, "mu must be >= 0");
  require(strictly_future(a, b), ErrorCode::InvalidArgument, "dhat needs b in a + V+");
  DhatRegion out;
  out.a = a, out.b = b, out.mu = mu, out.apex = apex;
  const RealPoint2 qa = a - apex, qb = b - apex;
  if (in_closed_forward(qa)) return out;  // D inside V+: nothing to add
  const bool a_past = in_closed_backward(qa), b_past = in_closed_backward(qb);
  if (a_past && b_past) return out;  // no tangent from either vertex; no claim

  // contact point of the tangent from vertex q, preferring a root of the given sign
  auto contact = [&](const RealPoint2& q, double prefer) -> RealPoint2 {
    if (mu == 0) {
      require(mink_square(q) < -tau_class, ErrorCode::NoTangent, "tangent through the apex is lightlike");
      return apex;
    }
    auto roots = detail::tangency_roots(q, mu);
    require(!roots.empty(), ErrorCode::NoTangent, "no tangent line from this vertex");
    double u = roots[0];
    for (double r : roots)
      if (sgn(r) == prefer) u = r;
    return apex + mu * RealPoint2{std::cosh(u), std::sinh(u)};
  };
  const double prefer = qa.x != 0 ? -sgn(qa.x) : -sgn(qb.x);
  if (!a_past) {
    RealPoint2 pa = contact(qa, prefer);
    out.contact_a = pa;
    out.pieces.push_back({DhatPiece::Kind::SegmentFuture, a, pa, b});
  }
  if (!b_past) {
    RealPoint2 pb = contact(qb, prefer);
    out.contact_b = pb;
    out.pieces.push_back({DhatPiece::Kind::RayPast, b, b - pb, a});
  }
  out.degenerate = out.pieces.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Double cone rule: a timelike polyline inside the region certifies D_{x,y}

inline Region double_cone_theorem_hull(const Region& b_region, const RealPoint2& x, const RealPoint2& y,
                                       const SearchBudget& budget = {}) {
  require(contains(b_region, x) && contains(b_region, y), ErrorCode::PreconditionFailed,
          "both endpoints must lie in the region");
  require(strictly_future(x, y), ErrorCode::PreconditionFailed, "y must lie in x + V+");
  constexpr int nseg = 256;
  auto segment_inside = [&](const RealPoint2& p, const RealPoint2& q) {
    if (!strictly_future(p, q)) return false;
    for (int i = 0; i <= nseg; ++i)
      if (!contains(b_region, p + (double(i) / nseg) * (q - p))) return false;
    return true;
  };
  if (segment_inside(x, y)) return DoubleCone{x, y};
  // one intermediate vertex inside D_{x,y}
  const UV ux = to_uv(x), uy = to_uv(y);
  const int g = std::max(2, budget.grid / 2);
  for (int i = 1; i < g; ++i)
    for (int j = 1; j < g; ++j) {
      RealPoint2 m = from_uv(ux.u + (uy.u - ux.u) * i / g, ux.v + (uy.v - ux.v) * j / g);
      if (segment_inside(x, m) && segment_inside(m, y)) return DoubleCone{x, y};
    }
  fail(ErrorCode::PreconditionFailed, "no timelike polyline inside the region connects the endpoints");
}

// ---------------------------------------------------------------------------
// Two double cones D_{(-a,0),0} and D_{c,d}: map by phi, apply the D^ rule to
// the image against (1/a, 0) + V+, and pull back.

struct PulledBackDhat {
  double a;
  DoubleCone dc;
  bool extended = false;
  std::optional<DhatRegion> image;  // in phi coordinates

  bool contains(const RealPoint2& p) const {
    if (lightcone::contains(dc, p)) return true;
    if (!extended || std::abs(mink_square(p)) <= tol_sing) return false;
    return dhat_contains(*image, phi(p));
  }
  // the image configuration (1/a, 0) + V+ together with phi(D_{c,d})
  Region image_region() const {
    return UnionOf{{ForwardCone{{1.0 / a, 0}}, DoubleCone{phi(dc.a), phi(dc.b)}}};
  }
};

inline PulledBackDhat two_double_cone_extension(double a, const DoubleCone& dc2) {
  require(std::isfinite(a) && a > 0, ErrorCode::InvalidArgument, "first double cone needs a > 0");
  (void)Region{dc2};  // validates b in a + V+
  PulledBackDhat out{a, dc2, false, std::nullopt};
  const UV c = to_uv(dc2.a), d = to_uv(dc2.b);
  const bool hits_u0 = c.u <= tau_class && d.u >= -tau_class;
  const bool hits_v0 = c.v <= tau_class && d.v >= -tau_class;
  require(!hits_u0 && !hits_v0, ErrorCode::UnsupportedConfiguration,
          "closure of the second double cone meets the light cone x^2 = 0");
  // spacelike to the first cone: nothing to gain
  const bool left = d.u <= -a && c.v >= 0, right = c.u >= 0 && d.v <= -a;
  if (left || right) return out;
  // inside V+: the image lies in (1/a,0) + V-
  if (c.u > 0 && c.v > 0) return out;
  const RealPoint2 apex{1.0 / a, 0};
  const RealPoint2 ia = phi(dc2.a), ib = phi(dc2.b);  // phi keeps the uv ordering
  if (in_closed_backward(ib - apex)) return out;
  DhatRegion img = dhat(ia, ib, 0.0, apex);
  if (img.degenerate) return out;
  out.extended = true;
  out.image = std::move(img);
  return out;
}

}  // namespace lightcone
