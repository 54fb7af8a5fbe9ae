#pragma once

#include <algorithm>
#include <cmath>

#include "regions.hpp"
#include "sampling.hpp"

namespace lightcone {

inline constexpr double tol_sing = 1e-12;

// phi(z) = -z / z^2, the reciprocal-radii involution
inline ComplexPoint2 phi(const ComplexPoint2& z) {
  const cplx s = mink_square(z);
  require(std::abs(s) > tol_sing, ErrorCode::SingularPoint, "phi is singular on z^2 = 0");
  return {-z.t / s, -z.x / s};
}

inline RealPoint2 phi(const RealPoint2& x) {
  const double s = mink_square(x);
  require(std::abs(s) > tol_sing, ErrorCode::SingularPoint, "phi is singular on x^2 = 0");
  return {-x.t / s, -x.x / s};
}

inline RealPoint2 w_tilde(double mu) {
  require(std::isfinite(mu) && mu > 0, ErrorCode::InvalidArgument, "mu must be > 0");
  return {-0.5 / mu, -0.5 / mu};
}

// Second map: z = psi(w) = phi(w - w~). It carries D_{(-1/mu,0),0} onto (0,mu) + W.
inline ComplexPoint2 psi(const ComplexPoint2& w, double mu) { return phi(w - ComplexPoint2(w_tilde(mu))); }
inline ComplexPoint2 psi_inverse(const ComplexPoint2& z, double mu) { return phi(z) + ComplexPoint2(w_tilde(mu)); }

// psi o phi in closed form: z = (w~ x^2 + x) / (1 + 2 x.w~). Carries (mu,0) + V+
// onto (0,mu) + W.
inline ComplexPoint2 psi_phi(const ComplexPoint2& x, double mu) {
  const RealPoint2 w = w_tilde(mu);
  const cplx den = 1.0 + 2.0 * mink_dot(x, w);
  require(std::abs(den) > tol_sing, ErrorCode::SingularPoint, "psi o phi denominator vanishes");
  const cplx x2 = mink_square(x);
  return {(w.t * x2 + x.t) / den, (w.x * x2 + x.x) / den};
}

// x = (z - w~ z^2) / (1 - 2 z.w~)
inline ComplexPoint2 psi_phi_inverse(const ComplexPoint2& z, double mu) {
  const RealPoint2 w = w_tilde(mu);
  const cplx den = 1.0 - 2.0 * mink_dot(z, w);
  require(std::abs(den) > tol_sing, ErrorCode::SingularPoint, "inverse psi o phi denominator vanishes");
  const cplx z2 = mink_square(z);
  return {(z.t - w.t * z2) / den, (z.x - w.x * z2) / den};
}

// (z0 - c0)^2 - (z1 - c1)^2 = lam
struct HyperbolaParams {
  RealPoint2 center;
  double lam;
};

// Image under psi o phi of the line x0 = sigma x1 + c.
inline HyperbolaParams line_image(double sigma, double c, double mu) {
  require(std::abs(std::abs(sigma) - 1.0) > tau_class, ErrorCode::LightlikeSlope,
          "lightlike lines map to lightlike lines, not hyperbolas");
  const double k = 1.0 - sigma;
  return {{(c - mu) / k, (c - sigma * mu) / k}, mu * mu * (1.0 + sigma) / k};
}

struct PhiPropertyReport {
  std::size_t samples = 0;
  std::size_t skipped_singular = 0;
  double max_involution_dev = 0;  // |phi(phi(z)) - z| / (1 + |z|)
  std::size_t tube_violations = 0;
  std::size_t cone_violations = 0;
  std::size_t spacelike_violations = 0;
  std::size_t dc_to_cone_violations = 0;
  std::size_t cone_to_dc_violations = 0;
  std::size_t dc_samples = 0;

  bool ok(double involution_tol = 1e-9) const {
    return max_involution_dev <= involution_tol && tube_violations == 0 && cone_violations == 0 &&
           spacelike_violations == 0 && dc_to_cone_violations == 0 && cone_to_dc_violations == 0;
  }
};

// The five reciprocal-radii properties on random samples. The double-cone item
// uses min(nsamples, 10^4) points in each direction.
inline PhiPropertyReport check_phi_properties(std::size_t nsamples, std::uint64_t seed = default_seed) {
  require(nsamples >= 1, ErrorCode::InvalidArgument, "nsamples must be >= 1");
  PhiPropertyReport rep;
  rep.samples = nsamples;
  Rng rng(seed);
  auto near_singular = [](const ComplexPoint2& z) { return std::abs(mink_square(z)) <= 1e-6; };
  auto future_timelike = [](const RealPoint2& y) { return y.t > std::abs(y.x); };
  auto past_timelike = [](const RealPoint2& y) { return -y.t > std::abs(y.x); };

  for (std::size_t i = 0; i < nsamples; ++i) {
    // 1: involution on generic complex points
    ComplexPoint2 z = make_complex({rng.uniform(-3, 3), rng.uniform(-3, 3)}, {rng.uniform(-3, 3), rng.uniform(-3, 3)});
    if (near_singular(z)) {
      ++rep.skipped_singular;
    } else {
      rep.max_involution_dev = std::max(rep.max_involution_dev, norm(phi(phi(z)) - z) / (1.0 + norm(z)));
    }
    // 2: tubes, imaginary part drawn from V+ or V-
    {
      double y0 = rng.uniform(0.01, 3), y1 = rng.uniform(-1, 1) * y0 * 0.999;
      double sgn_t = (i % 2 == 0) ? 1.0 : -1.0;
      RealPoint2 y{sgn_t * y0, y1};
      ComplexPoint2 zt = make_complex({rng.uniform(-3, 3), rng.uniform(-3, 3)}, y);
      if (!near_singular(zt)) {
        RealPoint2 im = phi(zt).im();
        bool ok = sgn_t > 0 ? future_timelike(im) : past_timelike(im);
        if (!ok) ++rep.tube_violations;
      } else {
        ++rep.skipped_singular;
      }
    }
    // 3: V+ -> V-
    {
      double u = std::exp(rng.uniform(-4, 4)), v = std::exp(rng.uniform(-4, 4));
      RealPoint2 x = from_uv(u, v);
      if (std::abs(mink_square(x)) > 1e-6 && !past_timelike(phi(x))) ++rep.cone_violations;
    }
    // 4: spacelike -> spacelike
    {
      double u = std::exp(rng.uniform(-4, 4)), v = -std::exp(rng.uniform(-4, 4));
      if (i % 2) std::swap(u, v);
      RealPoint2 x = from_uv(u, v);
      if (std::abs(mink_square(x)) > 1e-6 && !(mink_square(phi(x)) < 0)) ++rep.spacelike_violations;
    }
  }

  // 5: phi(D_{(-1/m,0),0}) = (m,0) + V+, both directions
  const std::size_t ndc = std::min<std::size_t>(nsamples, 10000);
  rep.dc_samples = ndc;
  for (std::size_t i = 0; i < ndc; ++i) {
    const double m = std::exp(rng.uniform(-1, 1));
    const Region dc = DoubleCone{{-1.0 / m, 0}, {0, 0}};
    const Region cone = ForwardCone{{m, 0}};
    // uv box of D is (-1/m, 0) x (-1/m, 0)
    double u = -rng.uniform(0.001, 0.999) / m, v = -rng.uniform(0.001, 0.999) / m;
    RealPoint2 x = from_uv(u, v);
    if (!contains(cone, phi(x))) ++rep.dc_to_cone_violations;
    double cu = m + std::exp(rng.uniform(-5, 5)), cv = m + std::exp(rng.uniform(-5, 5));
    RealPoint2 c = from_uv(cu, cv);
    if (!contains(dc, phi(c))) ++rep.cone_to_dc_violations;
  }
  return rep;
}

}  // namespace lightcone
