#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/error.hpp"
#include "oracles.hpp"

using namespace coverkit;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Parse;  // sentinel: nothing thrown
}

}  // namespace

TEST(Cover, RenumbersNodeIds) {
    CoverNode a = circle_node({0, 0}, 5);
    a.id = 42;
    const Cover c({a, rect_node({0, 0, 10, 10})});
    EXPECT_EQ(c[0].id, 0);
    EXPECT_EQ(c[1].id, 1);
}

TEST(Cover, RejectsInvalidNodes) {
    EXPECT_EQ(code_of([] { Cover(std::vector<CoverNode>{}); }), ErrorCode::InvalidCover);
    EXPECT_EQ(code_of([] { Cover({circle_node({0, 0}, 0)}); }), ErrorCode::InvalidCover);
    EXPECT_EQ(code_of([] { Cover({strip_node({0, 0}, {1, 1}, -1)}); }), ErrorCode::InvalidCover);
    EXPECT_EQ(code_of([] { Cover({polygon_node({{0, 0}, {10, 5}, {0, 10}, {3, 5}})}); }), ErrorCode::InvalidCover);
}

TEST(Cover, FactoryDefaults) {
    EXPECT_EQ(circle_node({0, 0}, 1).cursor, CursorHint::Hand);
    EXPECT_EQ(strip_node({0, 0}, {1, 0}, 1).cursor, CursorHint::Hand);
    EXPECT_EQ(polygon_node({{0, 0}, {1, 0}, {0, 1}}).cursor, CursorHint::SizeAll);
    EXPECT_EQ(rect_node({0, 0, 1, 1}).freedom, MovementFreedom::All);
}

TEST(NodeContains, AgreesWithOracles) {
    oracle::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        std::vector<CoverNode> nodes{
            circle_node(rng.point(-50, 50), rng.uniform(1, 40)),
            strip_node(rng.point(-50, 50), rng.point(-50, 50), rng.uniform(1, 20)),
        };
        // Random convex polygon: sorted angles on a circle.
        std::vector<double> angles;
        const int n = rng.integer(3, 9);
        for (int k = 0; k < n; ++k) angles.push_back(rng.uniform(0, 2 * kPi));
        std::sort(angles.begin(), angles.end());
        std::vector<Point2> poly;
        const Point2 c = rng.point(-20, 20);
        const double r = rng.uniform(10, 60);
        for (double a : angles) poly.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
        nodes.push_back(polygon_node(poly));

        for (const CoverNode& node : nodes) {
            for (int k = 0; k < 50; ++k) {
                const Point2 p = rng.point(-100, 100);
                if (const auto* ps = std::get_if<PolygonShape>(&node.shape)) {
                    if (oracle::outline_distance(ps->apexes, p) < 1e-6) continue;
                }
                EXPECT_EQ(node_contains(node, p), oracle::node_contains(node, p));
            }
        }
    }
}

TEST(NodeContains, BoundaryIsInside) {
    EXPECT_TRUE(node_contains(circle_node({0, 0}, 5), {5, 0}));
    EXPECT_TRUE(node_contains(rect_node({0, 0, 10, 10}), {10, 5}));
    EXPECT_TRUE(node_contains(rect_node({0, 0, 10, 10}), {0, 0}));
    EXPECT_TRUE(node_contains(strip_node({0, 0}, {10, 0}, 3), {13, 0}));
    EXPECT_FALSE(node_contains(strip_node({0, 0}, {10, 0}, 3), {13.001, 0}));
}

TEST(CoverHit, FirstContainingNodeDecides) {
    const Cover c({circle_node({0, 0}, 5, MovementFreedom::NS), rect_node({-10, -10, 20, 20})});
    EXPECT_EQ(cover_hit(c, {1, 1}), (HitOutcome{HitOutcome::Kind::Caught, 0}));
    EXPECT_EQ(cover_hit(c, {9, 9}), (HitOutcome{HitOutcome::Kind::Caught, 1}));
    EXPECT_EQ(cover_hit(c, {50, 50}).kind, HitOutcome::Kind::Miss);
}

TEST(CoverHit, TransparentAndBlockingNodes) {
    const Cover holey({circle_node({0, 0}, 5, MovementFreedom::Transparent), rect_node({-10, -10, 20, 20})});
    EXPECT_EQ(cover_hit(holey, {0, 0}).kind, HitOutcome::Kind::TransparentFallthrough);
    EXPECT_EQ(cover_hit(holey, {8, 8}).kind, HitOutcome::Kind::Caught);

    const Cover closed({rect_node({-10, -10, 20, 20}, MovementFreedom::None)});
    EXPECT_EQ(cover_hit(closed, {0, 0}), (HitOutcome{HitOutcome::Kind::Blocked, 0}));

    const Cover frozen({rect_node({-10, -10, 20, 20}, MovementFreedom::Freeze)});
    EXPECT_EQ(cover_hit(frozen, {0, 0}).kind, HitOutcome::Kind::Caught);
}

TEST(StandardRectCover, NodeCountsPerResizing) {
    const Rect rc{10, 20, 100, 50};
    EXPECT_EQ(standard_rect_cover(rc, Resizing::None).size(), 1u);
    EXPECT_EQ(standard_rect_cover(rc, Resizing::NS).size(), 3u);
    EXPECT_EQ(standard_rect_cover(rc, Resizing::WE).size(), 3u);
    EXPECT_EQ(standard_rect_cover(rc, Resizing::Any).size(), 9u);
}

TEST(StandardRectCover, LayoutAndFreedoms) {
    const Cover any = standard_rect_cover({0, 0, 100, 50}, Resizing::Any);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(shape_kind(any[i].shape), ShapeKind::Circle);
    EXPECT_EQ(any[4].freedom, MovementFreedom::NS);  // top
    EXPECT_EQ(any[5].freedom, MovementFreedom::WE);  // right
    EXPECT_EQ(any[6].freedom, MovementFreedom::NS);  // bottom
    EXPECT_EQ(any[7].freedom, MovementFreedom::WE);  // left
    EXPECT_EQ(any[8].cursor, CursorHint::SizeAll);
    EXPECT_EQ(std::get<CircleShape>(any[2].shape).center, (Point2{100, 50}));  // bottom-right corner

    const Cover ns = standard_rect_cover({0, 0, 100, 50}, Resizing::NS);
    EXPECT_EQ(ns[0].cursor, CursorHint::SizeNS);
    EXPECT_EQ(std::get<StripShape>(ns[1].shape).a.y, 50.0);
}

TEST(StandardRectCover, RejectsDegenerateRect) {
    EXPECT_EQ(code_of([] { (void)standard_rect_cover({0, 0, 0, 10}, Resizing::Any); }), ErrorCode::InvalidCover);
}

TEST(StandardRectCover, BorderBandReachesResizeNodes) {
    // Points within the half-strip of the visual border hit a resize node, never the area.
    oracle::Rng rng(22);
    const Rect rc{40, 30, 200, 120};
    for (const Resizing r : {Resizing::NS, Resizing::WE, Resizing::Any}) {
        const Cover c = standard_rect_cover(rc, r);
        for (int i = 0; i < 1000; ++i) {
            const int side = rng.integer(0, 3);
            const bool vertical_edge = side == 1 || side == 3;
            if (r == Resizing::NS && vertical_edge) continue;
            if (r == Resizing::WE && !vertical_edge) continue;
            const double off = rng.uniform(-kDefaultHalfStrip, kDefaultHalfStrip);
            Point2 p;
            switch (side) {
                case 0: p = {rng.uniform(rc.left, rc.right()), rc.top + off}; break;
                case 1: p = {rc.right() + off, rng.uniform(rc.top, rc.bottom())}; break;
                case 2: p = {rng.uniform(rc.left, rc.right()), rc.bottom() + off}; break;
                default: p = {rc.left + off, rng.uniform(rc.top, rc.bottom())}; break;
            }
            const HitOutcome h = cover_hit(c, p);
            ASSERT_EQ(h.kind, HitOutcome::Kind::Caught);
            EXPECT_LT(static_cast<std::size_t>(h.node), c.size() - 1) << to_string(r);
        }
    }
}
