#include <gtest/gtest.h>

#include <sstream>

#include "coverkit/figures/polygons.hpp"
#include "coverkit/harness/dump.hpp"
#include "coverkit/harness/scenario.hpp"
#include "coverkit/harness/server.hpp"
#include "coverkit/harness/session.hpp"

using namespace coverkit;

namespace {

std::string run_text(std::string_view text) {
    std::string out;
    for (const std::string& d : run_scenario(parse_scenario(text))) out += d;
    return out;
}

std::size_t error_line(std::string_view text) {
    try {
        run_text(text);
    } catch (const ScenarioError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------- parsing

TEST(Parse, EmptyAndComments) {
    EXPECT_TRUE(parse_scenario("").empty());
    EXPECT_TRUE(parse_scenario("# only a comment\n\n   \n").empty());
}

TEST(Parse, RectCommand) {
    const Scenario s = parse_scenario("add rect r1 0 0 100 50 any");
    ASSERT_EQ(s.size(), 1u);
    const auto& c = std::get<cmd::AddRect>(s[0].command);
    EXPECT_EQ(c.id, "r1");
    EXPECT_EQ(c.rc, (Rect{0, 0, 100, 50}));
    EXPECT_EQ(c.resizing, Resizing::Any);
}

TEST(Parse, HolesWithMixedShapes) {
    const Scenario s = parse_scenario("add holes h 0 0 200 100 hole circle 50 50 20 hole poly 100 20 150 20 150 80 100 80");
    const auto& c = std::get<cmd::AddHoles>(s[0].command);
    ASSERT_EQ(c.holes.size(), 2u);
    EXPECT_EQ(std::get<AreaWithHoles::PolyHole>(c.holes[1]).apexes.size(), 4u);
}

TEST(Parse, LabelTextIsRestOfLine) {
    const Scenario s = parse_scenario("add label l 1 2 hello   big world");
    EXPECT_EQ(std::get<cmd::AddLabel>(s[0].command).text, "hello big world");
}

TEST(Parse, ErrorsCiteLineNumber) {
    try {
        parse_scenario("press 10");
        FAIL();
    } catch (const ScenarioError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
    for (const char* bad : {"bounds 1 2 3", "frobnicate", "add rect r 0 0 10 10 sideways", "press 1 2 middle",
                            "add circle c 1 2 x", "clip maybe", "add hexagon h 1 2"}) {
        const std::string text = std::string("# header\n") + bad + "\n";
        try {
            parse_scenario(text);
            FAIL() << bad;
        } catch (const ScenarioError& e) {
            EXPECT_EQ(e.line(), 2u) << bad;
        }
    }
}

TEST(Parse, StateChanging) {
    EXPECT_FALSE(is_state_changing(cmd::Sense{}));
    EXPECT_FALSE(is_state_changing(cmd::Dump{}));
    EXPECT_TRUE(is_state_changing(cmd::Release{}));
}

// ---------------------------------------------------------------- execution

TEST(Run, ExecutionErrorsCiteLineNumber) {
    EXPECT_EQ(error_line("add rect r 0 0 50 50 any\npress 10 10 left\npress 10 10 left\n"), 3u);
    EXPECT_EQ(error_line("\ngroup elastic g nobody\n"), 2u);
    EXPECT_EQ(error_line("add ring r 100 100 60 50\n"), 1u);
    EXPECT_EQ(error_line("add rect a 0 0 50 50 any\nadd rect a 0 0 50 50 any\n"), 2u);
    EXPECT_EQ(error_line("add rect a 0 0 50 50 any\npopup zz\n"), 2u);
}

TEST(Run, DumpFormat) {
    EXPECT_EQ(run_text("add rect r1 0 0 100 50 any\ndump\n"),
              "scene 1\nr1 rect 0 9 0.000 0.000 0.000 100.000 50.000\n");
    EXPECT_EQ(run_text("add circle c1 50 50 20\ndump\n"),
              "scene 1\nc1 circle 0 17 0.000 30.000 30.000 40.000 40.000 | 50.000 50.000 20.000\n");
}

TEST(Run, FormatRealNeverPrintsNegativeZero) {
    EXPECT_EQ(format_real(-0.0), "0.000");
    EXPECT_EQ(format_real(-0.0001), "0.000");
    EXPECT_EQ(format_real(-1.5), "-1.500");
    EXPECT_EQ(format_real(2.0 / 3.0), "0.667");
}

TEST(Run, BorderDragResizes) {
    const std::string out = run_text(
        "add rect r1 0 0 100 50 any\npress 100 25 left\ndrag 120 25\ndrag 140 25\nrelease\ndump\n");
    EXPECT_EQ(out, "scene 1\nr1 rect 0 9 0.000 0.000 0.000 140.000 50.000\n");
}

TEST(Run, ReplayMatchesDirectCalls) {
    const std::string text =
        "add rect a 0 0 100 50 any\nadd polygon p 300 300 50 6\n"
        "press 100 25 left\ndrag 150 40\nrelease\n"
        "press 320 300 right\ndrag 300 340\nrelease\ndump\n";
    Scene direct;
    direct.emplace<RectangleStandard>("a", Rect{0, 0, 100, 50}, Resizing::Any);
    direct.emplace<RegularPolygonRsRt>("p", Point2{300, 300}, 50.0, 6);
    Mover& m = direct.mover();
    m.catch_at({100, 25}, MouseButton::Left);
    m.move({150, 40});
    direct.release();
    m.catch_at({320, 300}, MouseButton::Right);
    m.move({300, 340});
    direct.release();
    EXPECT_EQ(run_text(text), scene_block(direct));
}

TEST(Click, Threshold) {
    EXPECT_EQ(classify_gesture({0, 0}, {0, 0}), Gesture::Click);
    EXPECT_EQ(classify_gesture({0, 0}, {3.0, 0}), Gesture::Click);
    EXPECT_EQ(classify_gesture({0, 0}, {3.001, 0}), Gesture::Drag);
    EXPECT_EQ(classify_gesture({0, 0}, {10, 0}), Gesture::Drag);
}

TEST(Click, ShortLeftClickBringsFigureToTop) {
    Session s;
    for (const auto& line : {"add rect a 0 0 100 100 none", "add rect b 50 50 100 100 none",
                             "press 20 20 left", "drag 22 21", "release"}) {
        s.execute(*parse_command(line));
    }
    ASSERT_EQ(s.clicks().size(), 1u);
    EXPECT_EQ(s.clicks()[0].gesture, Gesture::Click);
    EXPECT_EQ(s.scene().name_of(s.scene().mover()[0].id()), "a");
    // A long drag does not reorder.
    for (const auto& line : {"press 140 140 left", "drag 160 160", "release"}) s.execute(*parse_command(line));
    EXPECT_EQ(s.clicks()[1].gesture, Gesture::Drag);
    EXPECT_EQ(s.scene().name_of(s.scene().mover()[0].id()), "a");
}

TEST(Click, RightClickDoesNotReorder) {
    Session s;
    for (const auto& line : {"add rect a 0 0 100 100 none", "add rect b 50 50 100 100 none",
                             "press 20 20 right", "release"}) {
        s.execute(*parse_command(line));
    }
    EXPECT_EQ(s.scene().name_of(s.scene().mover()[0].id()), "b");
}

TEST(Session, RubberBandFromEmptySpace) {
    Session s;
    for (const auto& line : {"add rect a 10 10 20 20 none", "add rect b 50 10 20 20 none", "press 0 0 left",
                             "drag 50 50", "drag 100 100"}) {
        s.execute(*parse_command(line));
    }
    EXPECT_TRUE(s.band_anchor().has_value());
    s.execute(cmd::Release{});
    ASSERT_NE(s.scene().selection(), nullptr);
    EXPECT_EQ(s.scene().selection()->enclosed().size(), 2u);
    // Shrink the frame below two figures: it disappears on release.
    for (const auto& line : {"press 100 100 left", "drag 40 100", "release"}) s.execute(*parse_command(line));
    EXPECT_EQ(s.scene().selection(), nullptr);
}

// ---------------------------------------------------------------- serve

TEST(Serve, PushesBlocksAndCursor) {
    ServeSession s;
    auto out = s.handle_line("add circle c1 50 50 20");
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].rfind("scene 1\nc1 circle", 0), 0u);
    out = s.handle_line("sense 50 50");
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], "cursor SizeAll\n");
    out = s.handle_line("press 10");
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], "err 3 missing press point\n");
    out = s.handle_line("covers on");
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[1].rfind("covers 17\n", 0), 0u);
    out = s.handle_line("");
    EXPECT_TRUE(out.empty());
}

TEST(Serve, StreamEndsWithInput) {
    std::istringstream in("add rect r 0 0 20 20 none\ndump\nbogus\n");
    std::ostringstream out;
    serve_stream(in, out);
    EXPECT_EQ(out.str(),
              "scene 1\nr rect 0 1 0.000 0.000 0.000 20.000 20.000\n"
              "scene 1\nr rect 0 1 0.000 0.000 0.000 20.000 20.000\n"
              "err 3 unknown command 'bogus'\n");
}

TEST(Serve, WebSocketAcceptKey) {
    EXPECT_EQ(websocket_accept_key("dGhlIHNhbXBsZSBub25jZQ=="), "s3pPLMBiTxaQ9kYGzzhZRbK+xOo=");
}
