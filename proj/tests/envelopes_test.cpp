#include <cmath>

#include <lightcone/envelopes.hpp>
#include <lightcone/sampling.hpp>

#include "support.hpp"

using namespace lightcone;

namespace {
ComplexPoint2 cz(RealPoint2 re, RealPoint2 im) { return make_complex(re, im); }
}  // namespace

TEST(MuConeEnvelope, Examples) {
  EXPECT_EQ(envelope_mu_cone(cz({2, 0}, {0, 1}), 1).kind, Verdict::Inside);
  EXPECT_EQ(envelope_mu_cone(cz({0.5, 0}, {0, 1}), 1).kind, Verdict::Excluded);
  EXPECT_EQ(envelope_mu_cone(cz({1, 0}, {1, 1}), 1).kind, Verdict::Inside);
  EXPECT_EQ(envelope_mu_cone(cz({2, 0}, {0, 0}), 1).kind, Verdict::Inside);
  EXPECT_EQ(envelope_mu_cone(cz({0, 0}, {1, 0.2}), 1).kind, Verdict::Inside);  // forward tube
  EXPECT_EQ(envelope_mu_cone(cz({0, 0}, {-1, 0.2}), 1).kind, Verdict::Inside);  // backward tube
  EXPECT_EQ(envelope_mu_cone(cz({1, 0}, {0, 1}), 1).kind, Verdict::Boundary);
  EXPECT_CODE(envelope_mu_cone(cz({1, 0}, {0, 1}), -1), ErrorCode::InvalidArgument);
}

TEST(MuConeEnvelope, NestedConesAreMonotone) {
  Rng rng(11);
  int inside_small = 0;
  for (int i = 0; i < 20000; ++i) {
    const double mu1 = rng.uniform(0.5, 3), mu2 = mu1 * rng.uniform(0, 0.99);
    const ComplexPoint2 z = cz({rng.uniform(-4, 4), rng.uniform(-4, 4)}, {rng.uniform(-2, 2), rng.uniform(-2, 2)});
    if (envelope_mu_cone(z, mu1).kind != Verdict::Inside) continue;
    ++inside_small;
    EXPECT_EQ(envelope_mu_cone(z, mu2).kind, Verdict::Inside);
  }
  EXPECT_GT(inside_small, 1000);
}

TEST(G1Envelope, Examples) {
  EXPECT_EQ(envelope_g1(cz({2, 0}, {0, 0}), 1, 3).kind, Verdict::Inside);
  const auto f = g1_bounds(0, {0, 0.5}, 1, 3);
  EXPECT_NEAR(f.f_minus, 2 - std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(f.f_plus, 2 + std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(f.f_minus, 1.133975, 1e-6);
  EXPECT_EQ(envelope_g1(cz({2, 0}, {0, 0.5}), 1, 3).kind, Verdict::Inside);
  EXPECT_EQ(envelope_g1(cz({0.9, 0}, {0, 0.5}), 1, 3).kind, Verdict::Excluded);
  // y^2 below -k^2: no bounds apply and the point is outside
  EXPECT_EQ(envelope_g1(cz({2, 0}, {0, 1.5}), 1, 3).kind, Verdict::Excluded);
  EXPECT_CODE(envelope_g1(cz({2, 0}, {0, 0}), 3, 1), ErrorCode::InvalidArgument);
}

TEST(ShellComplement, Examples) {
  EXPECT_EQ(envelope_shell_complement(ComplexPoint2{cplx(0, 1), 0}, 1).kind, Verdict::Inside);
  EXPECT_EQ(envelope_shell_complement(cz({0.5, 0}, {0, 0}), 1).kind, Verdict::Excluded);
  EXPECT_EQ(envelope_shell_complement(ComplexPoint2{cplx(1, 1), 0}, 1).kind, Verdict::Inside);
  EXPECT_EQ(envelope_shell_complement(cz({1, 0}, {0, 0}), 1).kind, Verdict::Boundary);
  EXPECT_EQ(envelope_shell_complement(cz({0, 0}, {0, 0}), 1).kind, Verdict::Boundary);
  EXPECT_EQ(envelope_shell_complement(cz({2, 0}, {0, 0}), 1).kind, Verdict::Inside);
}

TEST(Jld, Examples) {
  const Region shell = HyperboloidShell{1, 3};
  EXPECT_EQ(jld_excluded(cz({0, 0}, {0, 0}), shell).kind, Verdict::Excluded);
  EXPECT_EQ(jld_excluded(cz({2, 0}, {0, 0}), shell).kind, Verdict::Inside);
  EXPECT_EQ(jld_excluded(cz({2, 0}, {0, 1}), MuCone{1, {}}).kind, Verdict::Inside);
  EXPECT_EQ(jld_excluded(cz({0.5, 0}, {0, 1}), MuCone{1, {}}).kind, Verdict::Excluded);
  EXPECT_EQ(jld_excluded(cz({0, 0}, {1, 0}), shell).kind, Verdict::Inside);
  EXPECT_CODE(jld_excluded(cz({0, 0}, {0, 1}), Wedge{}), ErrorCode::UnsupportedRegion);
}

TEST(Jld, AgreesWithMuConeClosedForm) {
  Rng rng(5);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    const double mu = rng.uniform(0.2, 2);
    const ComplexPoint2 z = cz({rng.uniform(-3, 3), rng.uniform(-3, 3)}, {rng.uniform(-1, 1), rng.uniform(-2, 2)});
    const auto closed = envelope_mu_cone(z, mu);
    if (std::abs(closed.margin) < 1e-3 || is_lightlike(classify(z.im()))) continue;
    ++compared;
    EXPECT_EQ(jld_excluded(z, MuCone{mu, {}}).kind, closed.kind) << i;
  }
  EXPECT_GT(compared, 300);
}

TEST(Jld, AgreesWithShellClosedForm) {
  Rng rng(6);
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    // spacelike y with -k^2 < y^2 < 0, k = 1
    const double y1 = rng.uniform(0.05, 0.95), y0 = y1 * rng.uniform(-0.9, 0.9);
    const double x1 = rng.uniform(-2, 2), x0 = rng.uniform(0, 5);
    const ComplexPoint2 z = cz({x0, x1}, {y0, y1});
    const auto closed = envelope_g1(z, 1, 3);
    if (std::abs(closed.margin) < 1e-3) continue;
    ++compared;
    EXPECT_EQ(jld_excluded(z, HyperboloidShell{1, 3}).kind, closed.kind) << i;
  }
  EXPECT_GT(compared, 100);
}

TEST(LineRule, Examples) {
  EXPECT_EQ(line_point_in_envelope({1, 0}, {0, 1}, 0, 0.3, ForwardCone{}).kind, Verdict::Inside);
  EXPECT_EQ(line_point_in_envelope({1, 0}, {1, 0}, 7, 1, ForwardCone{}).kind, Verdict::Inside);
  EXPECT_EQ(line_point_in_envelope({2, 0}, {0, 1}, 5, -0.1, MuCone{1, {}}).kind, Verdict::Inside);
  // the line x0 = 0.5 never reaches V_1+
  EXPECT_CODE(line_point_in_envelope({0.5, 0}, {0, 1}, 0, 0.1, MuCone{1, {}}), ErrorCode::PreconditionFailed);
  EXPECT_CODE(line_point_in_envelope({2, 0}, {0, 1}, 0, 0, MuCone{1, {}}), ErrorCode::PreconditionFailed);
  EXPECT_CODE(line_point_in_envelope({2, 0}, {0, 1}, 0, 0.1, Wedge{}), ErrorCode::UnsupportedRegion);
}

TEST(LineRule, EveryPointAgreesWithClosedForm) {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const RealPoint2 a{rng.uniform(1.2, 4), rng.uniform(-0.5, 0.5)};
    const double th = rng.uniform(-1, 1);
    const RealPoint2 y{std::sinh(th), std::cosh(th)};
    if (!line_meets_mu_cone(a, y, 1)) continue;
    const double t = rng.uniform(-3, 3), tau = rng.uniform(0.01, 1);
    EXPECT_EQ(line_point_in_envelope(a, y, t, tau, MuCone{1, {}}).kind, Verdict::Inside) << i;
  }
}

TEST(WedgeRules, Examples) {
  const Region w = Wedge{{0, 1}};
  // (z - z~) = (2i, 0): square -4
  const ComplexPoint2 z = cz({1, 2}, {2, 0});
  EXPECT_EQ(wedge_hyperbola_membership(z, {1, 2}, -4, w).kind, Verdict::Inside);
  EXPECT_CODE(wedge_hyperbola_membership(z, {1, 2}, -3, w), ErrorCode::PreconditionFailed);
  EXPECT_CODE(wedge_hyperbola_membership(cz({1, 2}, {0, 0}), {1, 2}, -4, w), ErrorCode::PreconditionFailed);
  EXPECT_EQ(wedge_lightlike_line_point({0, 2}, {1, 1}, 0.4, 0.5, w).kind, Verdict::Inside);
  EXPECT_CODE(wedge_lightlike_line_point({0, 2}, {1, 0.5}, 0.4, 0.5, w), ErrorCode::PreconditionFailed);
  EXPECT_CODE(wedge_lightlike_line_point({0, 2}, {1, 1}, 0.4, 0.5, MuCone{1, {}}), ErrorCode::UnsupportedRegion);
}

TEST(DoubleConeQuadric, Examples) {
  const RealPoint2 a{-1, 0}, b{0, 0}, xt{-0.25, 0};
  const ComplexPoint2 z = ComplexPoint2(xt) + ComplexPoint2{cplx(0.2), cplx(0, 0.15)};
  EXPECT_NEAR(std::abs(mink_square(z - ComplexPoint2(xt)) - cplx(0.0625)), 0, 1e-15);
  EXPECT_EQ(double_cone_quadric_membership(z, xt, a, b).kind, Verdict::Inside);
  EXPECT_CODE(double_cone_quadric_membership(z, {-0.75, 0}, a, b), ErrorCode::PreconditionFailed);
  EXPECT_CODE(double_cone_quadric_membership(cz({0, 0}, {0, 0}), xt, a, b), ErrorCode::PreconditionFailed);
}

TEST(Dhat, InsideForwardConeIsDegenerate) {
  const auto d = dhat({1, 0}, {2, 0}, 0.5);
  EXPECT_TRUE(d.degenerate);
  EXPECT_TRUE(d.pieces.empty());
}

TEST(Dhat, TangentContactLiesOnHyperbola) {
  const auto d = dhat({0, 1}, {1, 1.2}, 1);
  ASSERT_FALSE(d.degenerate);
  ASSERT_TRUE(d.contact_a.has_value());
  const RealPoint2 p = *d.contact_a;
  EXPECT_NEAR(mink_square(p), 1, 1e-12);
  EXPECT_GT(p.t, 0);
  // the tangent at p passes through the vertex: (a - p).p = 0
  EXPECT_NEAR(mink_dot(RealPoint2{0, 1} - p, p), 0, 1e-12);
  // the only root of -sinh u = 1
  EXPECT_NEAR(p.t, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p.x, -1, 1e-12);
  // vertex (0,-2): 2 sinh u = 1
  const auto e = dhat({0, -2}, {1, -1.5}, 1);
  ASSERT_TRUE(e.contact_a.has_value());
  EXPECT_NEAR(e.contact_a->t, 1.118034, 1e-6);
  EXPECT_NEAR(e.contact_a->x, 0.5, 1e-12);
}

TEST(Dhat, AddsPointsOnlyOutsideTheDiamond) {
  const auto d = dhat({0, 1}, {1, 1.2}, 1);
  const Region dc = DoubleCone{{0, 1}, {1, 1.2}};
  int added = 0;
  Rng rng(3);
  for (int i = 0; i < 20000; ++i) {
    const RealPoint2 p{rng.uniform(-1, 3), rng.uniform(-1, 3)};
    if (contains(dc, p)) EXPECT_TRUE(dhat_contains(d, p));
    else if (dhat_contains(d, p)) ++added;
  }
  EXPECT_GT(added, 0);
}

TEST(Dhat, Validation) {
  EXPECT_CODE(dhat({1, 0}, {0, 0}, 1), ErrorCode::InvalidArgument);
  EXPECT_CODE(dhat({0, 0}, {1, 0}, -1), ErrorCode::InvalidArgument);
}

TEST(DoubleConeHull, Examples) {
  const Region hull = double_cone_theorem_hull(ForwardCone{}, {1, 0}, {3, 0});
  ASSERT_TRUE(hull.is<DoubleCone>());
  EXPECT_EQ(hull.get_if<DoubleCone>()->a, (RealPoint2{1, 0}));
  EXPECT_EQ(hull.get_if<DoubleCone>()->b, (RealPoint2{3, 0}));
  EXPECT_CODE(double_cone_theorem_hull(ForwardCone{}, {3, 0}, {1, 0}), ErrorCode::PreconditionFailed);
  const Region two = UnionOf{{DoubleCone{{0, -3}, {1, -3}}, DoubleCone{{0, 3}, {1, 3}}}};
  EXPECT_CODE(double_cone_theorem_hull(two, {0.5, -3}, {0.6, 3}), ErrorCode::PreconditionFailed);
}

TEST(DoubleConeHull, BentPathThroughUnion) {
  // an L-shaped union: the straight segment leaves the region, a polyline does not
  const Region l = UnionOf{{DoubleCone{from_uv(0, 0), from_uv(4, 1)}, DoubleCone{from_uv(3, 0), from_uv(4, 4)}}};
  const RealPoint2 x = from_uv(0.5, 0.5), y = from_uv(3.5, 3.5);
  EXPECT_FALSE(contains(l, from_uv(2, 2)));
  const Region hull = double_cone_theorem_hull(l, x, y);
  EXPECT_TRUE(hull.is<DoubleCone>());
}

TEST(TwoDoubleCones, SpacelikeSecondConeIsUnchanged) {
  const auto r = two_double_cone_extension(1, DoubleCone{{0, 3}, {1, 3}});
  EXPECT_FALSE(r.extended);
}

TEST(TwoDoubleCones, FutureSecondConeIsUnchanged) {
  const auto r = two_double_cone_extension(1, DoubleCone{{2, 0}, {4, 0}});
  EXPECT_FALSE(r.extended);
}

TEST(TwoDoubleCones, LightConeHitIsUnsupported) {
  EXPECT_CODE(two_double_cone_extension(1, DoubleCone{{-1, 0}, {1, 0}}), ErrorCode::UnsupportedConfiguration);
  EXPECT_CODE(two_double_cone_extension(0, DoubleCone{{0, 3}, {1, 3}}), ErrorCode::InvalidArgument);
}

TEST(TwoDoubleCones, GenericExtensionPassesImageSearch) {
  const DoubleCone dc2{{0, 1.5}, {1.2, 1.5}};
  const auto r = two_double_cone_extension(1, dc2);
  ASSERT_TRUE(r.extended);
  const Region img = r.image_region();
  Rng rng(4);
  int added = 0;
  for (int i = 0; i < 40000 && added < 60; ++i) {
    const RealPoint2 p{rng.uniform(-2, 4), rng.uniform(-1, 5)};
    if (std::abs(mink_square(p)) < 1e-3 || contains(dc2, p) || !r.contains(p)) continue;
    ++added;
    const auto v = jld_excluded(ComplexPoint2(phi(p)), img);
    EXPECT_NE(v.kind, Verdict::Excluded) << p.t << "," << p.x << " margin " << v.margin;
  }
  EXPECT_GT(added, 10);
}
