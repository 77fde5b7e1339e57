#include <gtest/gtest.h>

#include <cmath>

#include "coverkit/error.hpp"
#include "coverkit/figures/holes.hpp"
#include "coverkit/figures/label.hpp"
#include "coverkit/figures/nnode.hpp"
#include "coverkit/mover.hpp"
#include "drive.hpp"
#include "oracles.hpp"

using namespace coverkit;

namespace {

bool any_node_contains(const Cover& c, Point2 p, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
        if (oracle::node_contains(c[i], p)) return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------- borders

TEST(NNodeBorder, Counts) {
    EXPECT_EQ(nnode_border_count(100), 79u);
    EXPECT_EQ(nnode_border_count(1), 8u);
    EXPECT_EQ(nnode_border_count(10.18), 8u);
    EXPECT_EQ(nnode_border_count(20), 16u);
    EXPECT_EQ(nnode_border(Point2{}, 100).size(), 79u);
    EXPECT_THROW(nnode_border(Point2{}, 0), Error);
}

TEST(NNodeBorder, FirstNodeAtAngleZero) {
    const auto b = nnode_border({10, 20}, 30);
    const auto& c = std::get<CircleShape>(b[0].shape);
    EXPECT_NEAR(c.center.x, 40, 1e-12);
    EXPECT_NEAR(c.center.y, 20, 1e-12);
    EXPECT_EQ(c.radius, kSmallNodeRadius);
}

TEST(NNodeBorder, SampledOutlineIsCovered) {
    oracle::Rng rng(100);
    for (const double r : {10.0, 37.5, 100.0, 400.0}) {
        const Cover c(nnode_border({0, 0}, r));
        for (int i = 0; i < 10000; ++i) {
            const double a = rng.uniform(-oracle::kPi, oracle::kPi);
            const Point2 p{r * std::cos(a), r * std::sin(a)};
            ASSERT_TRUE(any_node_contains(c, p, 0, c.size())) << "r=" << r << " a=" << a;
        }
    }
}

// ---------------------------------------------------------------- circle

TEST(CircleRsRt, CoverIsBorderPlusArea) {
    CircleRsRt c({100, 100}, 20);
    EXPECT_EQ(c.cover().size(), 17u);
    EXPECT_EQ(c.expected_node_count(), 17u);
    const auto& area = std::get<CircleShape>(c.cover()[16].shape);
    EXPECT_EQ(area.radius, 15);
    EXPECT_THROW(CircleRsRt({0, 0}, 9), Error);
}

TEST(CircleRsRt, ResizeDefersRebuildToRelease) {
    CircleRsRt c({200, 200}, 20);
    Mover m;
    m.add(c);
    ASSERT_TRUE(m.catch_at({220, 200}, MouseButton::Left));
    m.move({300, 200});
    EXPECT_DOUBLE_EQ(c.radius(), 100);
    EXPECT_TRUE(c.pending_rebuild());
    EXPECT_EQ(c.cover().size(), 17u);
    m.release();
    EXPECT_FALSE(c.pending_rebuild());
    EXPECT_EQ(c.cover().size(), 80u);
}

TEST(CircleRsRt, AreaMovesAndRightIsRefused) {
    CircleRsRt c({200, 200}, 50);
    Mover m;
    m.add(c);
    ASSERT_TRUE(drag(m, {200, 200}, {230, 190}));
    EXPECT_EQ(c.center(), (Point2{230, 190}));
    ASSERT_TRUE(drag(m, {230, 190}, {250, 250}, MouseButton::Right));
    EXPECT_EQ(c.center(), (Point2{230, 190}));
}

TEST(CircleRsRt, ShrinkClampsAtMinimum) {
    CircleRsRt c({200, 200}, 50);
    Mover m;
    m.add(c);
    ASSERT_TRUE(drag(m, {250, 200}, {200, 200}));
    EXPECT_EQ(c.radius(), kMinSize);
    EXPECT_EQ(c.cover().size(), 9u);
}

// ---------------------------------------------------------------- ring

TEST(Ring, CoverIsThreeM) {
    for (const double r : {30.0, 100.0, 250.0}) {
        const Cover c = ring_cover({0, 0}, r / 2, r);
        EXPECT_EQ(c.size(), 3 * ring_sector_count(r));
    }
    EXPECT_EQ(ring_sector_count(100), 53u);
    EXPECT_THROW(ring_cover({0, 0}, 50, 50), Error);
    EXPECT_THROW(ring_cover({0, 0}, 0, 50), Error);
}

TEST(Ring, ConstructorChecks) {
    try {
        RingRsRt({0, 0}, 60, 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidRing);
    }
    EXPECT_THROW(RingRsRt({0, 0}, 5, 50), Error);
    EXPECT_THROW(RingRsRt({0, 0}, 45, 50), Error);
    EXPECT_NO_THROW(RingRsRt({0, 0}, 42, 50));
}

TEST(Ring, HoleIsEmptyAndBandsCoverRadii) {
    RingRsRt ring({0, 0}, 40, 100);
    const Cover& c = ring.cover();
    const std::size_t m = c.size() / 3;
    oracle::Rng rng(9);
    for (int i = 0; i < 3000; ++i) {
        const double a = rng.uniform(-oracle::kPi, oracle::kPi);
        const auto at = [a](double r) { return Point2{r * std::cos(a), r * std::sin(a)}; };
        EXPECT_TRUE(any_node_contains(c, at(rng.uniform(97, 99)), 0, m));
        EXPECT_TRUE(any_node_contains(c, at(rng.uniform(41, 43)), m, 2 * m));
        EXPECT_TRUE(any_node_contains(c, at(rng.uniform(45, 95)), 2 * m, 3 * m));
        EXPECT_FALSE(any_node_contains(c, at(rng.uniform(0, 35)), 0, 3 * m));
    }
}

TEST(Ring, ThirtyStepDragDefersRebuild) {
    RingRsRt ring({300, 300}, 40, 100);
    Mover m;
    m.add(ring);
    const std::size_t before = ring.cover().size();
    ASSERT_TRUE(m.catch_at({400, 300}, MouseButton::Left));
    for (int i = 1; i <= 30; ++i) {
        m.move({400.0 + 5 * i, 300});
        EXPECT_EQ(ring.cover().size(), before);
        EXPECT_TRUE(ring.pending_rebuild());
    }
    m.release();
    EXPECT_DOUBLE_EQ(ring.r_outer(), 250);
    EXPECT_EQ(ring.cover().size(), ring.expected_node_count());
    EXPECT_EQ(ring.cover().size(), 3 * ring_sector_count(250));
}

TEST(Ring, InnerResizeKeepsGap) {
    RingRsRt ring({300, 300}, 40, 100);
    Mover m;
    m.add(ring);
    ASSERT_TRUE(drag(m, {338, 300}, {500, 300}));
    EXPECT_DOUBLE_EQ(ring.r_inner(), 100 - kMinRingGap);
    ASSERT_TRUE(drag(m, {300 + 92, 300}, {300, 300}));
    EXPECT_DOUBLE_EQ(ring.r_inner(), kMinSize);
}

// ---------------------------------------------------------------- strip

TEST(StripRsRt, CoverLayout) {
    StripRsRt s({100, 100}, {200, 100}, 20);
    EXPECT_EQ(StripRsRt::fan_count(20), 9u);
    EXPECT_EQ(s.cover().size(), 2 * 9u + 3);
    EXPECT_EQ(s.cover().size(), s.expected_node_count());
    EXPECT_THROW(StripRsRt({0, 0}, {5, 0}, 20), Error);
    EXPECT_THROW(StripRsRt({0, 0}, {50, 0}, 5), Error);
}

TEST(StripRsRt, SideDragChangesWidth) {
    StripRsRt s({100, 100}, {200, 100}, 20);
    Mover m;
    m.add(s);
    ASSERT_TRUE(drag(m, {150, 120}, {150, 140}));
    EXPECT_DOUBLE_EQ(s.radius(), 40);
    EXPECT_EQ(s.c0(), (Point2{100, 100}));
    EXPECT_EQ(s.cover().size(), s.expected_node_count());
}

TEST(StripRsRt, CapDragsChangeLength) {
    StripRsRt s({100, 100}, {200, 100}, 20);
    Mover m;
    m.add(s);
    ASSERT_TRUE(drag(m, {220, 100}, {250, 100}));
    EXPECT_NEAR(s.c1().x, 230, 1e-9);
    EXPECT_NEAR(s.c0().x, 100, 1e-9);
    // Grab the cap 20 px beyond c0: c0 follows the pointer, keeping that offset.
    ASSERT_TRUE(drag(m, {80, 100}, {60, 100}));
    EXPECT_NEAR(s.c0().x, 80, 1e-9);
    EXPECT_NEAR(s.c1().x, 230, 1e-9);
    ASSERT_TRUE(drag(m, {60, 100}, {400, 100}));
    EXPECT_NEAR(s.length(), kMinSize, 1e-9);
    EXPECT_NEAR(s.c1().x, 230, 1e-9);
}

TEST(StripRsRt, RotationKeepsLengthAndMidpoint) {
    oracle::Rng rng(44);
    for (int i = 0; i < 50; ++i) {
        StripRsRt s({200, 200}, {300, 200}, 15);
        Mover m;
        m.add(s);
        const Point2 press{rng.uniform(210, 290), rng.uniform(195, 205)};
        const Point2 to = rng.point(0, 500);
        ASSERT_TRUE(drag(m, press, to, MouseButton::Right, 7));
        EXPECT_NEAR(s.length(), 100, 1e-9);
        EXPECT_NEAR(s.center().x, 250, 1e-9);
        EXPECT_NEAR(s.center().y, 200, 1e-9);
        if (to != Point2{250, 200}) {
            const double comp = oracle::reduce_loop(oracle::ray_angle({250, 200}, press));
            const double want = oracle::reduce_loop(oracle::ray_angle({250, 200}, to) - comp);
            EXPECT_LT(oracle::angle_gap(s.angle().radians, want), 1e-9);
        }
    }
}

// ---------------------------------------------------------------- circle inside polygon

TEST(CircInPoly, CoverLayoutAndTransparentHole) {
    CircleInsidePolyRsRt f({200, 200}, 100, 6, {210, 200}, 30);
    EXPECT_EQ(f.cover().size(), nnode_border_count(30) + 6 + 2);
    const CoverNode& hole = f.cover()[f.cover().size() - 2];
    EXPECT_EQ(hole.freedom, MovementFreedom::Transparent);
    Mover m;
    m.add(f);
    EXPECT_FALSE(m.sense({210, 200}).has_value());
    EXPECT_TRUE(m.sense({270, 200}).has_value());
}

TEST(CircInPoly, HoleMustFit) {
    EXPECT_THROW(CircleInsidePolyRsRt({0, 0}, 50, 4, {10, 0}, 30), Error);
    EXPECT_NO_THROW(CircleInsidePolyRsRt({0, 0}, 100, 4, {10, 0}, 30));
}

TEST(CircInPoly, InnerResizeDeferredOuterImmediate) {
    CircleInsidePolyRsRt f({200, 200}, 100, 6, {200, 200}, 20);
    Mover m;
    m.add(f);
    const std::size_t before = f.cover().size();
    ASSERT_TRUE(m.catch_at({220, 200}, MouseButton::Left));
    m.move({240, 200});
    EXPECT_TRUE(f.pending_rebuild());
    EXPECT_EQ(f.cover().size(), before);
    m.release();
    EXPECT_DOUBLE_EQ(f.hole_radius(), 40);
    EXPECT_EQ(f.cover().size(), f.expected_node_count());
    // Shrinking the polygon stops before it reaches the hole.
    ASSERT_TRUE(drag(m, {300, 200}, {200, 200}));
    EXPECT_NEAR(f.poly_radius() * std::cos(oracle::kPi / 6), 40 + kMinRingGap, 1e-9);
    EXPECT_FALSE(f.pending_rebuild());
}

TEST(CircInPoly, RotationCarriesTheHole) {
    CircleInsidePolyRsRt f({200, 200}, 100, 6, {230, 200}, 20);
    Mover m;
    m.add(f);
    ASSERT_TRUE(drag(m, {270, 200}, {200, 270}, MouseButton::Right, 8));
    EXPECT_NEAR(f.hole_center().x, 200, 1e-9);
    EXPECT_NEAR(f.hole_center().y, 230, 1e-9);
}

// ---------------------------------------------------------------- holes

TEST(Holes, NodeCountIsHolesPlusOne) {
    for (int k = 0; k <= 8; ++k) {
        std::vector<AreaWithHoles::Hole> holes;
        for (int i = 0; i < k; ++i) holes.push_back(AreaWithHoles::CircleHole{{20.0 + 40 * i, 50}, 10});
        AreaWithHoles a({0, 0, 400, 100}, holes);
        EXPECT_EQ(a.cover().size(), static_cast<std::size_t>(k) + 1);
    }
}

TEST(Holes, Validation) {
    EXPECT_THROW(AreaWithHoles({0, 0, 100, 100}, {AreaWithHoles::CircleHole{{95, 50}, 10}}), Error);
    const std::vector<Point2> dart{{10, 10}, {50, 30}, {90, 10}, {50, 90}};
    try {
        AreaWithHoles({0, 0, 100, 100}, {AreaWithHoles::PolyHole{dart}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidHole);
    }
}

TEST(Holes, FallThroughToObjectBelow) {
    RingRsRt below({50, 50}, 10, 40);
    AreaWithHoles a({0, 0, 100, 100}, {AreaWithHoles::CircleHole{{50, 50}, 45}});
    Mover m;
    m.add(a);
    m.add(below);
    ASSERT_TRUE(drag(m, {50 + 25, 50}, {60 + 25, 50}));
    EXPECT_EQ(below.center(), (Point2{60, 50}));
    EXPECT_EQ(a.rect(), (Rect{0, 0, 100, 100}));
    ASSERT_TRUE(drag(m, {5, 5}, {10, 5}));
    EXPECT_EQ(a.rect(), (Rect{5, 0, 100, 100}));
}

TEST(Holes, PlugHole) {
    AreaWithHoles a({0, 0, 100, 100}, {AreaWithHoles::CircleHole{{50, 50}, 10}});
    a.plug_hole(0);
    EXPECT_EQ(a.cover().size(), 1u);
    EXPECT_THROW(a.plug_hole(0), Error);
}

// ---------------------------------------------------------------- label

TEST(Label, MoveAndRotateAboutCenter) {
    RotatableLabel l({100, 100}, "hello");
    EXPECT_EQ(l.text_length(), 40);
    EXPECT_EQ(l.cover().size(), 1u);
    Mover m;
    m.add(l);
    ASSERT_TRUE(drag(m, {110, 100}, {120, 110}));
    EXPECT_EQ(l.anchor(), (Point2{110, 110}));
    const Point2 c = l.center();
    ASSERT_TRUE(drag(m, {c.x + 15, c.y}, {c.x, c.y + 15}, MouseButton::Right, 5));
    EXPECT_NEAR(l.angle().radians, oracle::kPi / 2, 1e-9);
    EXPECT_NEAR(l.center().x, c.x, 1e-9);
    EXPECT_NEAR(l.center().y, c.y, 1e-9);
    EXPECT_EQ(l.role(), ObjectRole::Info);
}
