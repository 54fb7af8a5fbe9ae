#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "numeric.hpp"
#include "regions.hpp"

namespace lightcone::spectral {

// Hyperboloid sets are stored as center + orient * {p : p^2 = m^2, p0 > 0} so
// that c - S stays in the same family (orient flips, center moves).
struct MassShell {
  double m;
  RealPoint2 center{};
  double orient = 1;
};
// center + orient * {m^2 <= p^2 <= m1^2, p0 > 0}
struct ShellBand {
  double m, m1;
  RealPoint2 center{};
  double orient = 1;
};
struct PointSet {
  std::vector<RealPoint2> pts;
};
struct Origin {};

struct SupportSet;
struct SupportUnion {
  std::vector<SupportSet> parts;
};

struct SupportSet {
  using Shape = std::variant<MassShell, ShellBand, PointSet, Origin, SupportUnion>;
  Shape shape;

  template <typename S>
    requires std::is_constructible_v<Shape, S>
  SupportSet(S s) : shape(std::move(s)) {
    validate();
  }
  template <typename S>
  const S* get_if() const {
    return std::get_if<S>(&shape);
  }

 private:
  void validate() const {
    if (auto* s = get_if<MassShell>())
      require(std::isfinite(s->m) && s->m > 0, ErrorCode::InvalidArgument, "mass shell needs m > 0");
    if (auto* s = get_if<ShellBand>())
      require(s->m > 0 && s->m <= s->m1 && !std::isnan(s->m1), ErrorCode::InvalidArgument,
              "shell band needs 0 < m <= m1");
  }
};

// membership with an absolute tolerance on the squares
inline bool contains(const SupportSet& S, const RealPoint2& p, double tol = 1e-9) {
  auto local = [](const RealPoint2& c, double orient, const RealPoint2& p) { return orient * (p - c); };
  if (auto* s = S.get_if<MassShell>()) {
    RealPoint2 q = local(s->center, s->orient, p);
    return q.t > 0 && std::abs(mink_square(q) - s->m * s->m) <= tol * (1 + s->m * s->m);
  }
  if (auto* s = S.get_if<ShellBand>()) {
    RealPoint2 q = local(s->center, s->orient, p);
    double sq = mink_square(q);
    return q.t > 0 && sq >= s->m * s->m - tol && sq <= s->m1 * s->m1 + tol;
  }
  if (auto* s = S.get_if<PointSet>()) {
    for (const auto& q : s->pts)
      if (norm(q - p) <= tol) return true;
    return false;
  }
  if (S.get_if<Origin>()) return norm(p) <= tol;
  for (const auto& part : std::get<SupportUnion>(S.shape).parts)
    if (contains(part, p, tol)) return true;
  return false;
}

// c - S
inline SupportSet reflect_shift(const SupportSet& S, const RealPoint2& c) {
  if (auto* s = S.get_if<MassShell>()) return MassShell{s->m, c - s->center, -s->orient};
  if (auto* s = S.get_if<ShellBand>()) return ShellBand{s->m, s->m1, c - s->center, -s->orient};
  if (auto* s = S.get_if<PointSet>()) {
    PointSet out;
    for (const auto& p : s->pts) out.pts.push_back(c - p);
    return out;
  }
  if (S.get_if<Origin>()) return PointSet{{c}};
  SupportUnion out;
  for (const auto& part : std::get<SupportUnion>(S.shape).parts) out.parts.push_back(reflect_shift(part, c));
  return out;
}

// supp Psi + supp Psi - (spectrum of U), exact when supp Psi is a finite point set
inline SupportSet support_Fminus(const SupportSet& supp_psi, const SupportSet& spec_u) {
  std::vector<RealPoint2> pts;
  if (auto* s = supp_psi.get_if<PointSet>()) pts = s->pts;
  else if (supp_psi.get_if<Origin>()) pts = {RealPoint2{}};
  else fail(ErrorCode::UnsupportedConfiguration, "supp Psi must be a finite point set");
  require(!pts.empty(), ErrorCode::InvalidArgument, "supp Psi is empty");
  if (pts.size() == 1) return reflect_shift(spec_u, 2.0 * pts[0]);
  SupportUnion out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) out.parts.push_back(reflect_shift(spec_u, pts[i] + pts[j]));
  return out;
}

struct SpectrumHypothesis {
  double m;
  double m1;  // +inf: unbounded band sentinel
  RealPoint2 s{1, 0};
  double epsilon = 0.1;

  void validate() const {
    require(std::isfinite(m) && m > 0, ErrorCode::InvalidArgument, "m must be > 0");
    require(!std::isnan(m1) && m1 >= m, ErrorCode::InvalidArgument, "m1 must be >= m (or inf)");
    require(s.t > 0 && std::abs(mink_square(s) - 1) <= 1e-9, ErrorCode::InvalidArgument,
            "s must be a forward unit timelike vector");
    require(std::isfinite(epsilon) && epsilon > 0, ErrorCode::InvalidArgument, "epsilon must be > 0");
  }
};

// {p^2 > m1^2, p0 > 0} ∪ (D_{0,(2m+eps)s})'
inline Region coincidence_region(const SpectrumHypothesis& h) {
  h.validate();
  Region comp = SpacelikeComplementOfDoubleCone{{}, (2 * h.m + h.epsilon) * h.s};
  if (std::isinf(h.m1)) return UnionOf{{comp}};
  return UnionOf{{MuCone{h.m1, {}}, comp}};
}

// q(theta) = 2 m s - p(theta), p(theta) the shell point at rapidity theta relative to s
inline RealPoint2 massgap_q(const SpectrumHypothesis& h, double theta) {
  const RealPoint2 sperp{h.s.x, h.s.t};
  const RealPoint2 p = h.m * (std::cosh(theta) * h.s + std::sinh(theta) * sperp);
  return 2 * h.m * h.s - p;
}

struct MassgapResult {
  std::optional<RealPoint2> witness;
  double theta = 0;
  double q_square = 0;
  double theta_threshold = 0;  // |theta| where q^2 crosses 0, bisected
  std::string reason;
};

inline constexpr double massgap_theta_max = 10.0;
inline constexpr int massgap_grid = 4001;

// Search Q = 2ms - MassShell{m} for points of N = M \ {0 <= p^2 <= m1^2}. The
// grid on [-10, 10] is visited in order of increasing |theta| (positive first),
// so the reported witness is the one closest to the symmetric point.
inline MassgapResult massgap_contradiction(const SpectrumHypothesis& h) {
  h.validate();
  MassgapResult out;
  if (std::isinf(h.m1)) {
    out.reason = "envelope step unavailable";
    return out;
  }
  auto in_n = [&](double th) {
    const double q2 = mink_square(massgap_q(h, th));
    return q2 < 0 || q2 > h.m1 * h.m1;
  };
  const int half = massgap_grid / 2;
  const double step = massgap_theta_max / half;
  for (int k = 0; k <= half; ++k) {
    for (double sign : {1.0, -1.0}) {
      if (k == 0 && sign < 0) continue;
      const double th = sign * k * step;
      if (!in_n(th)) continue;
      out.theta = th;
      out.witness = massgap_q(h, th);
      out.q_square = mink_square(*out.witness);
      const double lo = (k - 1) * step, hi = k * step;
      out.theta_threshold = bisect([&](double t) { return mink_square(massgap_q(h, sign * t)); }, lo, hi, 1e-10);
      out.reason = "witness";
      return out;
    }
  }
  out.reason = "no witness on the grid";
  return out;
}

}  // namespace lightcone::spectral
