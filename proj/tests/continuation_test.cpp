#include <cmath>
#include <numbers>

#include <lightcone/continuation.hpp>
#include <lightcone/sampling.hpp>

#include "support.hpp"

using namespace lightcone;

namespace {

CurveFamily standard_family() { return build_hyperbola_family({0, 1}, -0.8, {1, 0}, 1); }

cplx rational(const ComplexPoint2& z) { return 1.0 / (mink_dot(z, RealPoint2{1, 0.3}) - 6.0); }
cplx polynomial(const ComplexPoint2& z) { return z.t * z.t - 3.0 * z.t * z.x + z.x * z.x * z.x + 2.0; }

}  // namespace

TEST(Family, Builds) {
  const CurveFamily f = standard_family();
  EXPECT_LT(f.t_lo, f.t_hi);
  EXPECT_GT(f.rho, 0);
  EXPECT_FALSE(f.mirrored);
  // q lies on the diagonal x0 = x1 and on the line through p
  EXPECT_NEAR(f.q.t, f.q.x, 1e-12);
  EXPECT_NEAR((f.q - f.p).t, -0.8 * (f.q - f.p).x, 1e-12);
  EXPECT_GE(f.alpha_star, 0);
}

TEST(Family, Validation) {
  EXPECT_CODE(build_hyperbola_family({0, 1}, 1, {1, 0}, 1), ErrorCode::BadGeometry);
  EXPECT_CODE(build_hyperbola_family({0, 1}, -1.5, {1, 0}, 1), ErrorCode::BadGeometry);
  // not on the boundary of the spacelike complement of D_{0,s}
  EXPECT_CODE(build_hyperbola_family({0.5, 1}, 0.5, {1, 0}, 1), ErrorCode::PreconditionFailed);
  EXPECT_CODE(build_hyperbola_family({2, 1}, 0.5, {1, 0}, 1), ErrorCode::PreconditionFailed);
  EXPECT_CODE(build_hyperbola_family({0, 1}, -0.8, {0, 1}, 1), ErrorCode::InvalidArgument);
}

TEST(Family, MirroredOnLeftPiece) {
  const CurveFamily f = build_hyperbola_family({0, -1}, -0.8, {1, 0}, 1);
  EXPECT_TRUE(f.mirrored);
  const CurveFamily g = standard_family();
  for (double t : {f.t_lo, 0.5 * (f.t_lo + f.t_hi), f.t_hi}) {
    EXPECT_NEAR(f.K(t).t, g.K(t).t, 1e-12);
    EXPECT_NEAR(f.K(t).x, -g.K(t).x, 1e-12);
  }
}

TEST(Family, ShiftBeyondThresholdLeavesTheDiamond) {
  const CurveFamily f = standard_family();
  const Region dprime = SpacelikeComplementOfDoubleCone{{}, {1, 0}};
  const double alpha = f.alpha_star + 0.05;
  for (int i = 0; i <= 100; ++i) {
    const double t = f.t_lo + (f.t_hi - f.t_lo) * i / 100;
    EXPECT_TRUE(contains(dprime, f.K(t, alpha))) << t;
  }
}

TEST(Family, TangentMatchesFiniteDifference) {
  const CurveFamily f = standard_family();
  double prev = inf;
  for (double h : {1e-3, 1e-4}) {
    double worst = 0;
    for (int i = 0; i <= 20; ++i) {
      const double t = f.t_lo + (f.t_hi - f.t_lo) * i / 20;
      const RealPoint2 fd = (1 / (2 * h)) * (f.K(t + h) - f.K(t - h));
      worst = std::max(worst, norm(fd - f.tangent(t)) / norm(f.tangent(t)));
    }
    EXPECT_LT(worst, 1e-5);
    EXPECT_LT(worst, prev);
    prev = worst;
  }
}

TEST(Family, ComplexParameterRestrictsToK) {
  const CurveFamily f = standard_family();
  for (double t : {f.t_lo, f.t_hi}) {
    const ComplexPoint2 z = f.h(t, 0.3);
    EXPECT_NEAR(norm(z.im()), 0, 1e-15);
    EXPECT_EQ(z.re(), f.K(t, 0.3));
  }
}

TEST(Cauchy, Examples) {
  const Contour w = Contour::ellipse(0, 1, 1, 256);
  std::vector<cplx> c(w.size(), cplx(3, -1)), id(w.size()), pole(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) id[k] = w.nodes[k], pole[k] = 1.0 / (w.nodes[k] - 5.0);
  EXPECT_LT(std::abs(cauchy_continue(c, w, cplx(0.3, 0.2)).value - cplx(3, -1)), 1e-13);
  EXPECT_LT(std::abs(cauchy_continue(id, w, cplx(0.2, 0.1)).value - cplx(0.2, 0.1)), 1e-13);
  const auto r = cauchy_continue(pole, w, 0.2);
  EXPECT_NEAR(r.value.real(), -1 / 4.8, 1e-8);
  EXPECT_NEAR(r.value.imag(), 0, 1e-8);
  EXPECT_LT(r.error_estimate, 1e-8);
}

TEST(Cauchy, Validation) {
  const Contour w = Contour::ellipse(0, 1, 1, 64);
  std::vector<cplx> v(w.size(), 1.0);
  EXPECT_CODE(cauchy_continue(v, w, 0.999), ErrorCode::TargetTooClose);
  EXPECT_CODE(cauchy_continue(std::vector<cplx>(3), w, 0), ErrorCode::InvalidArgument);
  EXPECT_CODE(Contour::ellipse(0, 1, 1, 2), ErrorCode::InvalidArgument);
}

TEST(Continuation, RationalAlongFamily) {
  const CurveFamily f = standard_family();
  const auto pts = continue_along_family(rational, f, {0, 0.1, 0.3, f.alpha_star + 0.05});
  ASSERT_EQ(pts.size(), 4u * 9u);
  for (const auto& p : pts) EXPECT_LT(std::abs(p.value - rational(ComplexPoint2(p.point))), 1e-6);
}

TEST(Continuation, PolynomialAlongFamily) {
  const CurveFamily f = standard_family();
  for (const auto& p : continue_along_family(polynomial, f, {0, 0.2})) {
    const cplx exact = polynomial(ComplexPoint2(p.point));
    EXPECT_LT(std::abs(p.value - exact), 1e-10 * (1 + std::abs(exact)));
  }
}

TEST(Continuation, PoleInsideExcludedSet) {
  // poles on z^2 = 1/4, inside {0 <= z^2 <= 1}; the contour stays away from them
  auto f = [](const ComplexPoint2& z) { return 1.0 / (mink_square(z) - 0.25); };
  const CurveFamily fam = standard_family();
  for (const auto& p : continue_along_family(f, fam, {0, 0.2})) {
    const cplx exact = f(ComplexPoint2(p.point));
    EXPECT_LT(std::abs(p.value - exact), 1e-6 * (1 + std::abs(exact)));
  }
}

TEST(MaxPrinciple, Examples) {
  const CurveFamily fam = standard_family();
  const AnalyticPatch patch = patch_from_family(fam, 0.2);
  EXPECT_GT(patch.delta, 0);
  EXPECT_LE(patch.delta, 0.25);
  EXPECT_TRUE(max_principle_check(patch, polynomial).pass);
  EXPECT_TRUE(max_principle_check(patch, rational).pass);
  // |Re z0| is not the modulus of a holomorphic function; only reported
  const auto ctl = max_principle_check(patch, [](const ComplexPoint2& z) { return cplx(z.t.real()); });
  EXPECT_GE(ctl.boundary_sup, 0);
  EXPECT_CODE(max_principle_check(patch, polynomial, 2), ErrorCode::InvalidArgument);
}

TEST(MaxPrinciple, RandomPolynomials) {
  const CurveFamily fam = standard_family();
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    cplx c[6];
    for (auto& v : c) v = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    auto f = [&](const ComplexPoint2& z) {
      return c[0] + c[1] * z.t + c[2] * z.x + c[3] * z.t * z.x + c[4] * std::pow(z.t, 3) + c[5] * std::pow(z.x, 5);
    };
    const auto rep = max_principle_check(patch_from_family(fam, rng.uniform(0, 0.5)), f);
    EXPECT_TRUE(rep.pass) << rep.interior_sup << " > " << rep.boundary_sup;
  }
}
