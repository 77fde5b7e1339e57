#include <gtest/gtest.h>

#include <cmath>

#include "coverkit/error.hpp"
#include "coverkit/figures/nnode.hpp"
#include "coverkit/groups.hpp"
#include "coverkit/mover.hpp"
#include "drive.hpp"
#include "oracles.hpp"

using namespace coverkit;

namespace {

bool inside(const Rect& outer, const Rect& inner) {
    return inner.left >= outer.left - 1e-9 && inner.top >= outer.top - 1e-9 &&
           inner.right() <= outer.right() + 1e-9 && inner.bottom() <= outer.bottom() + 1e-9;
}

Rect random_rect(oracle::Rng& rng) {
    return {rng.uniform(-200, 200), rng.uniform(-200, 200), rng.uniform(10, 400), rng.uniform(10, 400)};
}

}  // namespace

// ---------------------------------------------------------------- placement

TEST(Placement, InsideIsFractionOutsideIsEdgeOffset) {
    EXPECT_EQ(axis_placement(25, 0, 100), AxisPlacement(Fraction{0.25}));
    EXPECT_EQ(axis_placement(0, 0, 100), AxisPlacement(Fraction{0.0}));
    EXPECT_EQ(axis_placement(100, 0, 100), AxisPlacement(Fraction{1.0}));
    EXPECT_EQ(axis_placement(-7, 0, 100), AxisPlacement(EdgeOffset{-7}));
    EXPECT_EQ(axis_placement(130, 0, 100), AxisPlacement(EdgeOffset{30}));
    EXPECT_EQ(axis_coordinate(Fraction{0.25}, 100, 300), 150);
    EXPECT_EQ(axis_coordinate(EdgeOffset{-7}, 100, 300), 93);
    EXPECT_EQ(axis_coordinate(EdgeOffset{30}, 100, 300), 330);
}

TEST(Comment, ResizeKeepsFractionsAndOffsets) {
    Comment in({0, 0, 100, 100}, {25, 75}, "in");
    Comment out({0, 0, 100, 100}, {-20, 130}, "out");
    const Rect bigger{10, 10, 200, 300};
    in.set_parent_rect(bigger);
    out.set_parent_rect(bigger);
    EXPECT_EQ(in.center(), (Point2{60, 235}));
    EXPECT_EQ(out.center(), (Point2{-10, 340}));
    EXPECT_EQ(comment_recalc_on_resize(in, bigger, {0, 0, 100, 100}), (Point2{25, 75}));
}

TEST(Comment, RandomSequencesInvertExactly) {
    oracle::Rng rng(1234);
    for (int seq = 0; seq < 300; ++seq) {
        Rect parent = random_rect(rng);
        const Point2 start = rng.point(-400, 400);
        Comment c(parent, start, "note");
        struct Step {
            bool resize;
            Rect from;
            Rect to;
            Point2 d;
        };
        std::vector<Step> steps;
        for (int k = 0; k < 8; ++k) {
            if (rng.coin()) {
                const Rect next = random_rect(rng);
                const AxisPlacement px = c.placement_x();
                const AxisPlacement py = c.placement_y();
                c.set_parent_rect(next);
                EXPECT_EQ(c.placement_x(), px);
                EXPECT_EQ(c.placement_y(), py);
                if (const auto* f = std::get_if<Fraction>(&px)) {
                    EXPECT_NEAR(c.center().x, next.left + f->f * next.width, 1e-9);
                } else {
                    const double d = std::get<EdgeOffset>(px).d;
                    EXPECT_EQ(c.center().x, d < 0 ? next.left + d : next.right() + d);
                }
                steps.push_back({true, parent, next, {}});
                parent = next;
            } else {
                const Point2 d = rng.point(-60, 60);
                c.move_by(d.x, d.y);
                steps.push_back({false, {}, {}, d});
            }
        }
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            if (it->resize) {
                c.set_parent_rect(it->from);
            } else {
                c.move_by(-it->d.x, -it->d.y);
            }
        }
        // Dump precision is three decimals.
        EXPECT_NEAR(c.center().x, start.x, 5e-4);
        EXPECT_NEAR(c.center().y, start.y, 5e-4);
    }
}

TEST(Comment, RightDragRotates) {
    Comment c({0, 0, 100, 100}, {50, 50}, "abc");
    Mover m;
    m.add(c);
    ASSERT_TRUE(drag(m, {60, 50}, {50, 60}, MouseButton::Right, 5));
    EXPECT_NEAR(c.angle().radians, oracle::kPi / 2, 1e-9);
    EXPECT_EQ(c.center(), (Point2{50, 50}));
}

// ---------------------------------------------------------------- rectangle with comments

TEST(RectangleWithComments, IntoMoverPutsCommentsFirst) {
    RectangleWithComments r({0, 0, 200, 100});
    Comment& a = r.add_comment({20, 20}, "A");
    Comment& b = r.add_comment({40, 40}, "B");
    Comment& c = r.add_comment({60, 60}, "C");
    Mover m;
    r.into_mover(m, 0);
    ASSERT_EQ(m.size(), 4u);
    EXPECT_EQ(&m[0], &a);
    EXPECT_EQ(&m[1], &b);
    EXPECT_EQ(&m[2], &c);
    EXPECT_EQ(&m[3], &r);
    EXPECT_EQ(a.parent_id(), r.id());
}

TEST(RectangleWithComments, CommentsFollowParentDrags) {
    RectangleWithComments r({0, 0, 200, 100});
    Comment& in = r.add_comment({50, 50}, "in");
    Comment& out = r.add_comment({250, 50}, "out");
    Mover m;
    r.into_mover(m, 0);
    ASSERT_TRUE(drag(m, {200, 80}, {400, 80}));  // right edge: width 200 -> 400
    EXPECT_EQ(r.rect(), (Rect{0, 0, 400, 100}));
    EXPECT_EQ(in.center(), (Point2{100, 50}));
    EXPECT_EQ(out.center(), (Point2{450, 50}));
    ASSERT_TRUE(drag(m, {150, 90}, {160, 95}));  // area move
    EXPECT_EQ(in.center(), (Point2{110, 55}));
    // Dragging a comment does not touch the parent.
    ASSERT_TRUE(drag(m, {110, 55}, {130, 55}));
    EXPECT_EQ(in.center(), (Point2{130, 55}));
    EXPECT_EQ(r.rect(), (Rect{10, 5, 400, 100}));
}

TEST(RectangleWithComments, RemoveComment) {
    RectangleWithComments r({0, 0, 200, 100});
    Comment& a = r.add_comment({20, 20}, "A");
    const ObjectId id = a.id();
    r.remove_comment(id);
    EXPECT_EQ(r.comment_count(), 0u);
    try {
        r.remove_comment(id);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownObject);
    }
}

// ---------------------------------------------------------------- linked

TEST(Linked, RigidUnderAnyDrag) {
    RectangleStandard a({0, 0, 50, 50}, Resizing::Any);
    RectangleStandard b({100, 0, 50, 50}, Resizing::Any);
    LinkedRectangles g({&a, &b});
    EXPECT_EQ(g.cover().size(), 3u);
    EXPECT_EQ(a.parent_id(), g.id());
    Mover m;
    m.add(g);
    oracle::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const Rect gb = g.bounds();
        const Point2 press{gb.left + rng.uniform(0, gb.width), gb.top + rng.uniform(0, gb.height)};
        ASSERT_TRUE(drag(m, press, rng.point(-100, 300)));
        EXPECT_EQ(a.rect().width, 50);
        EXPECT_EQ(b.rect().height, 50);
        EXPECT_NEAR(b.rect().left - a.rect().left, 100, 1e-9);
        EXPECT_NEAR(b.rect().top - a.rect().top, 0, 1e-9);
    }
    EXPECT_THROW(LinkedRectangles({}), Error);
}

// ---------------------------------------------------------------- frame group

TEST(FrameGroup, ResizingFromRange) {
    RectangleStandard e({10, 10, 20, 20}, Resizing::None);
    EXPECT_EQ(FrameGroup({0, 0, 100, 100}, {100, 100, 100, 100}, "t", {}).resizing(), Resizing::None);
    EXPECT_EQ(FrameGroup({0, 0, 100, 100}, {50, 200, 100, 100}, "t", {}).resizing(), Resizing::WE);
    EXPECT_EQ(FrameGroup({0, 0, 100, 100}, {100, 100, 50, 200}, "t", {}).resizing(), Resizing::NS);
    EXPECT_EQ(FrameGroup({0, 0, 100, 100}, {50, 200, 50, 200}, "t", {&e}).resizing(), Resizing::Any);
    EXPECT_THROW(FrameGroup({0, 0, 300, 100}, {50, 200, 50, 200}, "t", {}), Error);
}

TEST(FrameGroup, ElementsKeepFractionalAnchors) {
    RectangleStandard e({15, 35, 10, 10}, Resizing::None);  // center (20, 40)
    FrameGroup g({0, 0, 100, 100}, {50, 300, 50, 300}, "t", {&e});
    Mover m;
    m.add(g);
    ASSERT_TRUE(drag(m, {100, 100}, {200, 150}));  // bottom-right corner
    EXPECT_EQ(g.frame(), (Rect{0, 0, 200, 150}));
    EXPECT_NEAR(e.rect().center().x, 40, 1e-9);
    EXPECT_NEAR(e.rect().center().y, 60, 1e-9);
    EXPECT_EQ(e.rect().width, 10);
    ASSERT_TRUE(drag(m, {200, 75}, {900, 75}));  // right edge beyond max
    EXPECT_EQ(g.frame().width, 300);
    ASSERT_TRUE(drag(m, {150, 5}, {160, 15}));  // area
    EXPECT_EQ(g.frame(), (Rect{10, 10, 300, 150}));
    EXPECT_NEAR(e.rect().center().x, 70, 1e-9);
}

// ---------------------------------------------------------------- elastic

TEST(Elastic, FrameFollowsChildren) {
    RectangleStandard a({0, 0, 50, 50}, Resizing::Any);
    RectangleStandard b({100, 0, 50, 50}, Resizing::Any);
    ElasticGroup g({&a, &b}, "grp");
    EXPECT_EQ(g.frame(), (Rect{-8, -8, 166, 66}));
    Mover m;
    g.into_mover(m, 0);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(&m[0], &a);
    EXPECT_EQ(&m[2], &g);
    // Child drag: only that child moves, frame adjusts.
    ASSERT_TRUE(drag(m, {125, 25}, {175, 25}));
    EXPECT_EQ(b.rect().left, 150);
    EXPECT_EQ(a.rect().left, 0);
    EXPECT_GE(g.frame().right(), b.rect().right() + 8);
    // Gap drag: everything moves rigidly.
    ASSERT_TRUE(drag(m, {75, 25}, {85, 35}));
    EXPECT_EQ(a.rect().left, 10);
    EXPECT_EQ(b.rect().left, 160);
    EXPECT_EQ(a.rect().top, 10);
    EXPECT_THROW(ElasticGroup({}, "x"), Error);
}

TEST(Elastic, RandomScriptsKeepContainment) {
    oracle::Rng rng(21);
    for (int run = 0; run < 20; ++run) {
        RectangleStandard a({0, 0, 60, 40}, Resizing::Any);
        CircleRsRt b({150, 50}, 30);
        RectangleStandard c({0, 100, 40, 40}, Resizing::NS);
        ElasticGroup g({&a, &b, &c}, "grp", 10);
        Mover m;
        g.into_mover(m, 0);
        for (int k = 0; k < 40; ++k) {
            const Rect f = g.frame();
            const Point2 press{f.left + rng.uniform(0, f.width), f.top + rng.uniform(0, f.height)};
            drag(m, press, press + rng.point(-80, 80));
            const Rect inner = g.frame().inflated(-10);
            for (const MoveableObject* ch : g.children()) {
                ASSERT_TRUE(inside(inner, ch->bounds()));
            }
        }
    }
}

// ---------------------------------------------------------------- simple frame

TEST(SimpleFrame, BorderMovesEnclosedCornerReencloses) {
    RectangleStandard a({10, 10, 20, 20}, Resizing::None);
    RectangleStandard b({50, 10, 20, 20}, Resizing::None);
    RectangleStandard c({110, 10, 20, 20}, Resizing::None);
    std::vector<MoveableObject*> all{&a, &b, &c};
    const auto query = [&](const Rect& rc) {
        std::vector<MoveableObject*> out;
        for (MoveableObject* o : all) {
            if (inside(rc, o->bounds())) out.push_back(o);
        }
        return out;
    };
    SimpleFrame f({0, 0, 100, 50}, query);
    EXPECT_EQ(f.enclosed().size(), 2u);
    EXPECT_EQ(f.cover().size(), 9u);
    EXPECT_TRUE(f.cover()[0].visible);
    EXPECT_EQ(f.cover()[8].freedom, MovementFreedom::Transparent);

    Mover m;
    m.add(f);
    m.add(a);
    // Interior press falls through to the figure beneath.
    ASSERT_TRUE(m.catch_at({20, 20}, MouseButton::Left));
    EXPECT_EQ(m.caught_object(), &a);
    m.release();

    ASSERT_TRUE(drag(m, {50, 0}, {55, 0}));
    EXPECT_EQ(a.rect().left, 15);
    EXPECT_EQ(b.rect().left, 55);
    EXPECT_EQ(c.rect().left, 110);
    EXPECT_EQ(f.frame(), (Rect{5, 0, 100, 50}));

    ASSERT_TRUE(drag(m, {105, 50}, {140, 50}));
    EXPECT_EQ(f.enclosed().size(), 3u);
}
