#include "coverkit/harness/scenario.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>

namespace coverkit {

namespace {

[[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorCode::Parse, message);
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

class Args {
public:
    explicit Args(std::vector<std::string_view> tokens) : t_(std::move(tokens)) {}

    std::size_t remaining() const { return t_.size() - pos_; }

    std::string_view word(const char* what) {
        if (pos_ >= t_.size()) fail(std::string("missing ") + what);
        return t_[pos_++];
    }
    std::string id() { return std::string(word("id")); }

    double real(const char* what) {
        const std::string_view s = word(what);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
            fail(std::string("bad number for ") + what + ": '" + std::string(s) + "'");
        }
        return v;
    }
    int integer(const char* what) {
        const std::string_view s = word(what);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            fail(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
        }
        return v;
    }
    Point2 point(const char* what) {
        const double x = real(what);
        return {x, real(what)};
    }
    Rect rect() {
        const double x = real("x");
        const double y = real("y");
        const double w = real("width");
        return {x, y, w, real("height")};
    }
    /// Remaining tokens joined by single spaces.
    std::string rest(const char* what) {
        if (pos_ >= t_.size()) fail(std::string("missing ") + what);
        std::string out(t_[pos_++]);
        while (pos_ < t_.size()) {
            out += ' ';
            out += t_[pos_++];
        }
        return out;
    }
    std::vector<std::string> ids(const char* what) {
        std::vector<std::string> out;
        while (pos_ < t_.size()) out.emplace_back(t_[pos_++]);
        if (out.empty()) fail(std::string("missing ") + what);
        return out;
    }
    void done() {
        if (pos_ != t_.size()) fail("unexpected argument '" + std::string(t_[pos_]) + "'");
    }

private:
    std::vector<std::string_view> t_;
    std::size_t pos_ = 0;
};

template <class E>
E keyword(std::string_view w, std::initializer_list<std::pair<std::string_view, E>> table, const char* what) {
    for (const auto& [k, v] : table) {
        if (k == w) return v;
    }
    fail(std::string("bad ") + what + " '" + std::string(w) + "'");
}

MouseButton button(Args& a) {
    return keyword<MouseButton>(a.word("button"), {{"left", MouseButton::Left}, {"right", MouseButton::Right}},
                                "button");
}

std::optional<MouseButton> optional_button(Args& a) {
    if (a.remaining() == 0) return std::nullopt;
    const std::string_view w = a.word("button");
    if (w == "any") return std::nullopt;
    return keyword<MouseButton>(w, {{"left", MouseButton::Left}, {"right", MouseButton::Right}}, "button");
}

Command parse_add(Args& a) {
    const std::string_view kind = a.word("figure kind");
    if (kind == "rect") {
        cmd::AddRect c{a.id(), a.rect(), {}};
        c.resizing = keyword<Resizing>(a.word("resizing"),
                                       {{"none", Resizing::None},
                                        {"ns", Resizing::NS},
                                        {"we", Resizing::WE},
                                        {"any", Resizing::Any}},
                                       "resizing");
        return c;
    }
    if (kind == "polygon") {
        cmd::AddPolygon c{a.id(), a.point("center"), a.real("radius"), 0};
        c.n = a.integer("apex count");
        return c;
    }
    if (kind == "perforated") {
        cmd::AddPerforated c{a.id(), a.point("center"), a.real("inner radius"), 0, 0};
        c.r_outer = a.real("outer radius");
        c.n = a.integer("apex count");
        return c;
    }
    if (kind == "chatoyant") {
        cmd::AddChatoyant c{a.id(), a.point("center"), a.real("radius"), 0};
        c.n = a.integer("apex count");
        return c;
    }
    if (kind == "circle") return cmd::AddCircle{a.id(), a.point("center"), a.real("radius")};
    if (kind == "ring") {
        cmd::AddRing c{a.id(), a.point("center"), a.real("inner radius"), 0};
        c.r_outer = a.real("outer radius");
        return c;
    }
    if (kind == "strip") {
        cmd::AddStrip c{a.id(), a.point("start"), {}, 0};
        c.b = a.point("end");
        c.radius = a.real("radius");
        return c;
    }
    if (kind == "circpoly") {
        cmd::AddCircPoly c{a.id(), a.point("center"), a.real("radius"), 0, 0};
        c.n = a.integer("apex count");
        c.hole_radius = a.real("hole radius");
        return c;
    }
    if (kind == "holes") {
        cmd::AddHoles c{a.id(), a.rect(), {}};
        while (a.remaining() > 0) {
            if (a.word("'hole'") != "hole") fail("expected 'hole'");
            const std::string_view shape = a.word("hole shape");
            if (shape == "circle") {
                const Point2 center = a.point("hole center");
                c.holes.emplace_back(AreaWithHoles::CircleHole{center, a.real("hole radius")});
            } else if (shape == "poly") {
                AreaWithHoles::PolyHole poly;
                // Apexes run until the next 'hole' keyword or the end of the line.
                while (a.remaining() >= 2) {
                    Args probe = a;
                    if (probe.word("x") == "hole") break;
                    poly.apexes.push_back(a.point("hole apex"));
                }
                if (poly.apexes.size() < 3) fail("polygon hole needs at least 3 apexes");
                c.holes.emplace_back(std::move(poly));
            } else {
                fail("bad hole shape '" + std::string(shape) + "'");
            }
        }
        return c;
    }
    if (kind == "widget") {
        cmd::AddWidget c{a.id(), a.rect(), {}, {}, true};
        c.min.w = a.real("min width");
        c.min.h = a.real("min height");
        c.max.w = a.real("max width");
        c.max.h = a.real("max height");
        c.movable = keyword<bool>(a.word("movable|fixed"), {{"movable", true}, {"fixed", false}}, "widget mode");
        return c;
    }
    if (kind == "label") {
        cmd::AddLabel c{a.id(), a.point("anchor"), {}};
        c.text = a.rest("text");
        return c;
    }
    if (kind == "pcircle") {
        std::string id = a.id();
        const Point2 center = a.point("center");
        PrimitiveFigure::Shape shape = PrimitiveFigure::Circle{center, a.real("radius")};
        return cmd::AddPrimitive{std::move(id), std::move(shape), optional_button(a)};
    }
    if (kind == "prect") {
        std::string id = a.id();
        PrimitiveFigure::Shape shape = PrimitiveFigure::RectFig{a.rect()};
        return cmd::AddPrimitive{std::move(id), std::move(shape), optional_button(a)};
    }
    if (kind == "pstrip") {
        std::string id = a.id();
        const Point2 p0 = a.point("start");
        const Point2 p1 = a.point("end");
        PrimitiveFigure::Shape shape = PrimitiveFigure::StripFig{p0, p1, a.real("radius")};
        return cmd::AddPrimitive{std::move(id), std::move(shape), optional_button(a)};
    }
    if (kind == "commented") return cmd::AddCommented{a.id(), a.rect()};
    if (kind == "comment") {
        cmd::AddComment c{a.id(), a.id(), a.point("center"), {}};
        c.text = a.rest("text");
        return c;
    }
    fail("unknown figure kind '" + std::string(kind) + "'");
}

Command parse_group(Args& a) {
    const std::string_view kind = a.word("group kind");
    if (kind == "elastic") {
        cmd::GroupElastic c{a.id(), {}};
        c.children = a.ids("children");
        return c;
    }
    if (kind == "frame") {
        cmd::GroupFrame c{a.id(), a.rect(), {}, {}};
        c.range.min_w = a.real("min width");
        c.range.max_w = a.real("max width");
        c.range.min_h = a.real("min height");
        c.range.max_h = a.real("max height");
        c.children = a.ids("children");
        return c;
    }
    if (kind == "linked") {
        cmd::GroupLinked c{a.id(), {}};
        c.children = a.ids("children");
        return c;
    }
    fail("unknown group kind '" + std::string(kind) + "'");
}

}  // namespace

ScenarioError::ScenarioError(std::size_t line, ErrorCode code, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

std::optional<Command> parse_command(std::string_view line) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') return std::nullopt;
    Args a(std::move(tokens));
    const std::string_view verb = a.word("command");
    Command c = [&]() -> Command {
        if (verb == "bounds") {
            const double w = a.real("width");
            return cmd::Bounds{w, a.real("height")};
        }
        if (verb == "clip") {
            return cmd::Clip{keyword<Clipping>(a.word("clipping"),
                                               {{"visual", Clipping::Visual},
                                                {"safe", Clipping::Safe},
                                                {"unsafe", Clipping::Unsafe}},
                                               "clipping")};
        }
        if (verb == "covers") {
            return cmd::Covers{keyword<bool>(a.word("on|off"), {{"on", true}, {"off", false}}, "covers mode")};
        }
        if (verb == "add") return parse_add(a);
        if (verb == "group") return parse_group(a);
        if (verb == "plug") {
            cmd::Plug p{a.id(), 0};
            const int i = a.integer("hole index");
            if (i < 0) fail("hole index must be non-negative");
            p.index = static_cast<std::size_t>(i);
            return p;
        }
        if (verb == "press") {
            const Point2 pt = a.point("press point");
            return cmd::Press{pt, button(a)};
        }
        if (verb == "drag") return cmd::Drag{a.point("drag point")};
        if (verb == "release") return cmd::Release{};
        if (verb == "sense") return cmd::Sense{a.point("sense point")};
        if (verb == "select") {
            const Point2 p0 = a.point("corner");
            return cmd::Select{p0, a.point("corner")};
        }
        if (verb == "popup") return cmd::Popup{a.id()};
        if (verb == "renew") return cmd::Renew{};
        if (verb == "dump") return cmd::Dump{};
        fail("unknown command '" + std::string(verb) + "'");
    }();
    a.done();
    return c;
}

Scenario parse_scenario(std::string_view text) {
    Scenario out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        try {
            if (auto c = parse_command(line)) out.push_back({line_no, std::move(*c)});
        } catch (const Error& e) {
            throw ScenarioError(line_no, e.code(), e.what());
        }
    }
    return out;
}

bool is_state_changing(const Command& command) {
    return !std::holds_alternative<cmd::Sense>(command) && !std::holds_alternative<cmd::Dump>(command);
}

}  // namespace coverkit
