#include <cmath>
#include <numbers>

#include <lightcone/regions.hpp>
#include <lightcone/sampling.hpp>

#include "support.hpp"

using namespace lightcone;

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(MuCone{1, {}}, {2, 0}));
  EXPECT_TRUE(contains(DoubleCone{{-1, 0}, {0, 0}}, {-0.5, 0}));
  EXPECT_TRUE(contains(HyperboloidShell{1, 3}, {2, 0}));
  EXPECT_FALSE(contains(SpacelikeComplementOfDoubleCone{{0, 0}, {1, 0}}, {0, 0.6}));
}

TEST(Contains, MoreShapes) {
  EXPECT_TRUE(contains(ForwardCone{}, {1, 0.5}));
  EXPECT_FALSE(contains(ForwardCone{}, {1, 1}));  // boundary is outside
  EXPECT_TRUE(contains(BackwardCone{{1, 0}}, {0, 0}));
  EXPECT_FALSE(contains(MuCone{1, {}}, {0.9, 0}));
  EXPECT_TRUE(contains(SpacelikeSet{}, {0, 1}));
  EXPECT_FALSE(contains(SpacelikeSet{}, {1, 0}));
  EXPECT_TRUE(contains(Wedge{{0, 1}}, {0, 2}));
  EXPECT_FALSE(contains(Wedge{{0, 1}}, {0, 0.5}));
  EXPECT_TRUE(contains(ShellCap{1}, {-0.5, 0}));
  EXPECT_FALSE(contains(ShellCap{1}, {-1.5, 0}));
  EXPECT_FALSE(contains(ShellCap{1}, {0.5, 0}));
  EXPECT_TRUE(contains(SpacelikeComplementOfDoubleCone{{0, 0}, {1, 0}}, {0.5, 3}));
  const Region u = UnionOf{{DoubleCone{{-1, 0}, {0, 0}}, MuCone{2, {}}}};
  EXPECT_TRUE(contains(u, {-0.5, 0}));
  EXPECT_TRUE(contains(u, {3, 0}));
  EXPECT_FALSE(contains(u, {1, 0}));
}

TEST(Region, Validation) {
  EXPECT_CODE((Region{DoubleCone{{0, 0}, {0, 1}}}), ErrorCode::InvalidArgument);
  EXPECT_CODE((Region{HyperboloidShell{3, 1}}), ErrorCode::InvalidArgument);
  EXPECT_CODE((Region{MuCone{-1, {}}}), ErrorCode::InvalidArgument);
  EXPECT_CODE((Region{ShellCap{0}}), ErrorCode::InvalidArgument);
  EXPECT_CODE((Region{UnionOf{}}), ErrorCode::InvalidArgument);
}

TEST(BoundaryDistance, Examples) {
  EXPECT_NEAR(boundary_distance(ForwardCone{}, {2, 0}), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(boundary_distance(DoubleCone{{-1, 0}, {0, 0}}, {-0.5, 0}), std::sqrt(2.0) / 4, 1e-12);
  EXPECT_NEAR(boundary_distance(ForwardCone{}, {1, 1}), 0, 1e-12);
  EXPECT_NEAR(boundary_distance(MuCone{1, {}}, {1, 0}), 0, 1e-9);
  EXPECT_NEAR(boundary_distance(HyperboloidShell{1, 3}, {1, 0}), 0, 1e-9);
}

TEST(BoundaryDistance, HyperbolaAgainstBruteForce) {
  // distance from p to {x^2 = 1, x0 > 0} by dense parameter sweep
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const RealPoint2 p{rng.uniform(-2, 4), rng.uniform(-3, 3)};
    double best = inf;
    for (int k = 0; k <= 200000; ++k) {
      const double th = -6 + 12.0 * k / 200000;
      best = std::min(best, norm(p - RealPoint2{std::cosh(th), std::sinh(th)}));
    }
    EXPECT_NEAR(boundary_distance(MuCone{1, {}}, p), best, 1e-6) << p;
  }
}

TEST(BoundaryDistance, UnionInteriorUsesJointBoundary) {
  // two overlapping diamonds: the point sits deep inside their union
  const Region u = UnionOf{{DoubleCone{{-1, 0}, {0.5, 0}}, DoubleCone{{-0.5, 0}, {1, 0}}}};
  const double d = boundary_distance(u, {-0.25, 0});
  EXPECT_GT(d, boundary_distance(DoubleCone{{-1, 0}, {0.5, 0}}, {-0.25, 0}) - 1e-9);
  // brute force: nearest non-member point along rays
  double best = inf;
  for (int k = 0; k < 720; ++k) {
    const double ang = 2 * std::numbers::pi * k / 720;
    for (double r = 0; r < 2; r += 1e-4)
      if (!contains(u, RealPoint2{-0.25 + r * std::cos(ang), r * std::sin(ang)})) {
        best = std::min(best, r);
        break;
      }
  }
  EXPECT_NEAR(d, best, 2e-3);
}

TEST(EdgeNeighborhood, Examples) {
  const Region g = ForwardCone{};
  EXPECT_TRUE(edge_neighborhood_contains(g, ComplexPoint2(RealPoint2{2, 0})));
  EXPECT_FALSE(edge_neighborhood_contains(g, ComplexPoint2(RealPoint2{0, 2})));
  // dist((10, 0) + apex shift, boundary) = 3.2 for a cone with the apex placed accordingly
  const Region cone = ForwardCone{{10 - 3.2 * std::numbers::sqrt2, 0}};
  ASSERT_NEAR(boundary_distance(cone, {10, 0}), 3.2, 1e-12);
  EXPECT_TRUE(edge_neighborhood_contains(cone, make_complex({10, 0}, {0, 0.05})));
  // real part outside the closure, small imaginary part: no witness
  EXPECT_FALSE(edge_neighborhood_contains(g, make_complex({-1, 0}, {0, 0.01})));
}

TEST(EdgeNeighborhood, RealPointsAddNothing) {
  Rng rng(9);
  const Region regions[] = {MuCone{1, {}}, DoubleCone{{-1, 0}, {1, 0}}, SpacelikeSet{}, HyperboloidShell{1, 3}};
  for (const auto& r : regions)
    for (int i = 0; i < 2000; ++i) {
      const RealPoint2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
      EXPECT_EQ(edge_neighborhood_contains(r, ComplexPoint2(x)), contains(r, x));
    }
}

TEST(Pflug, Examples) {
  auto g = pflug_growth(2, 0);
  EXPECT_DOUBLE_EQ(g.delta, 1);
  g = pflug_growth(0.5, 0);
  EXPECT_DOUBLE_EQ(g.delta, 0.5);
  EXPECT_DOUBLE_EQ(g.delta_tilde, 0.5);
  g = pflug_growth(0.5, 1);
  EXPECT_DOUBLE_EQ(g.delta, 0.5);
  EXPECT_NEAR(g.delta_tilde, 1 / (2 * std::sqrt(2.0)), 1e-15);
  EXPECT_CODE(pflug_growth(0, 1), ErrorCode::InvalidArgument);
}

TEST(Pflug, InequalityOnRandomInputs) {
  Rng rng(10);
  for (int i = 0; i < 100000; ++i) {
    const double d = std::exp(rng.uniform(-10, 5)), n = std::exp(rng.uniform(-10, 5));
    const auto g = pflug_growth(d, n);
    ASSERT_LE(g.delta * g.delta, g.delta_tilde + 1e-12);
    ASSERT_LE(g.delta_tilde, g.delta + 1e-12);
    ASSERT_GT(g.delta, 0);
    ASSERT_LE(g.delta, 1);
  }
}

TEST(MuCone, StableUnderForwardTranslation) {
  Rng rng(12);
  const Region g = MuCone{1, {}};
  const auto pts = sample_interior(g, 2000, 12, 50);
  for (const auto& p : pts) {
    const double r = rng.uniform(0.01, 5), xi = rng.uniform(-2, 2);
    EXPECT_TRUE(contains(g, p + r * RealPoint2{std::cosh(xi), std::sinh(xi)}));
  }
}

TEST(Sampling, InteriorPointsAreMembers) {
  const Region regions[] = {ForwardCone{{1, 0}},         MuCone{0.5, {0, 1}},   DoubleCone{{-1, 0}, {0, 0}},
                            HyperboloidShell{1, 3},      ShellCap{2},           SpacelikeSet{},
                            Wedge{{0, 1}},               SpacelikeComplementOfDoubleCone{{0, 0}, {1, 0}},
                            UnionOf{{MuCone{2, {}}, DoubleCone{{-1, 0}, {0, 0}}}}};
  for (const auto& r : regions) {
    const auto pts = sample_interior(r, 1000, 5);
    EXPECT_GT(pts.size(), 900u) << type_name(r);
    for (const auto& p : pts) ASSERT_TRUE(contains(r, p)) << type_name(r) << " " << p;
  }
}

TEST(Sampling, Deterministic) {
  const auto a = sample_interior(DoubleCone{{-1, 0}, {0, 0}}, 100, 77);
  const auto b = sample_interior(DoubleCone{{-1, 0}, {0, 0}}, 100, 77);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
}

TEST(LineMeetsMuCone, Cases) {
  EXPECT_TRUE(line_meets_mu_cone({0, 5}, {1, 0}, 1));         // timelike
  EXPECT_FALSE(line_meets_mu_cone({0, 1}, {1, 1}, 1));        // lightlike, escapes only into the past
  EXPECT_TRUE(line_meets_mu_cone({0, 1}, {1, -1}, 1));        // lightlike, x^2 = 2s - 1 grows with s
  EXPECT_FALSE(line_meets_mu_cone({0, 1}, {0, 1}, 0));        // the x1 axis stays spacelike
  EXPECT_TRUE(line_meets_mu_cone({2, 0}, {0, 1}, 1));         // passes through (2,0)
  EXPECT_FALSE(line_meets_mu_cone({0.5, 0}, {0, 1}, 1));      // max x^2 = 0.25
}
