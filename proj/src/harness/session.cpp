#include "coverkit/harness/session.hpp"

#include "coverkit/figures/holes.hpp"
#include "coverkit/figures/label.hpp"
#include "coverkit/figures/nnode.hpp"
#include "coverkit/figures/polygons.hpp"
#include "coverkit/figures/rectangle.hpp"
#include "coverkit/groups.hpp"
#include "coverkit/harness/dump.hpp"
#include "coverkit/widgets.hpp"

namespace coverkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
T& expect(MoveableObject& obj, std::string_view name, const char* what) {
    if (auto* t = dynamic_cast<T*>(&obj)) return *t;
    throw Error(ErrorCode::InvalidArgument, "'" + std::string(name) + "' is not " + what);
}

}  // namespace

const char* to_string(Gesture gesture) {
    return gesture == Gesture::Click ? "click" : "drag";
}

Gesture classify_gesture(Point2 press, Point2 release) {
    return distance(press, release) <= kClickTolerance ? Gesture::Click : Gesture::Drag;
}

void Session::add_object(std::string name, std::unique_ptr<MoveableObject> obj) {
    scene_.add(std::move(name), std::move(obj));
}

std::vector<MoveableObject*> Session::top_level_children(const std::vector<std::string>& names) {
    std::vector<MoveableObject*> out;
    for (const std::string& n : names) {
        MoveableObject& obj = scene_.get(n);
        if (obj.parent_id()) {
            throw Error(ErrorCode::InvalidArgument, "'" + n + "' already belongs to " + scene_.name_of(*obj.parent_id()));
        }
        for (const MoveableObject* seen : out) {
            if (seen == &obj) throw Error(ErrorCode::DuplicateObject, "'" + n + "' listed twice");
        }
        out.push_back(&obj);
    }
    return out;
}

void Session::press(Point2 pt, MouseButton button) {
    Mover& m = scene_.mover();
    if (m.caught() || band_) {
        throw Error(ErrorCode::SequenceError, "press while a press is already active");
    }
    press_pt_ = pt;
    press_button_ = button;
    last_pt_ = pt;
    if (m.catch_at(pt, button)) return;
    if (!m.sense(pt) && button == MouseButton::Left) band_ = pt;
}

void Session::release() {
    if (band_) {
        const Point2 a = *band_;
        band_.reset();
        press_pt_.reset();
        scene_.rubber_band_select(a, last_pt_);
        return;
    }
    Mover& m = scene_.mover();
    // Read the id first: releasing may destroy a shrunken selection frame.
    const MoveableObject* obj = m.caught_object();
    const ObjectId caught_id = obj ? obj->id() : ObjectId{};
    const ReleaseResult r = scene_.release();
    if (!r.released || !press_pt_) {
        press_pt_.reset();
        return;
    }
    const ClickReport report{caught_id, press_button_, *press_pt_, last_pt_, classify_gesture(*press_pt_, last_pt_)};
    press_pt_.reset();
    clicks_.push_back(report);
    if (report.gesture == Gesture::Click && report.button == MouseButton::Left) {
        // The queue may have been rebuilt by the release (selection upkeep).
        if (const auto index = m.index_of(report.object); index && m[*index].role() == ObjectRole::Figure) {
            scene_.bring_to_top(*index);
        }
    }
}

ExecResult Session::execute(const Command& command) {
    ExecResult result;
    Mover& m = scene_.mover();
    std::visit(
        Overloaded{
            [&](const cmd::Bounds& c) {
                if (!(c.w > 0.0) || !(c.h > 0.0)) throw Error(ErrorCode::InvalidArgument, "bounds must be positive");
                m.set_clip_bounds(Rect{0, 0, c.w, c.h});
            },
            [&](const cmd::Clip& c) { m.set_clipping(c.level); },
            [&](const cmd::Covers& c) { covers_ = c.on; },
            [&](const cmd::AddRect& c) { add_object(c.id, std::make_unique<RectangleStandard>(c.rc, c.resizing)); },
            [&](const cmd::AddPolygon& c) {
                add_object(c.id, std::make_unique<RegularPolygonRsRt>(c.center, c.radius, c.n));
            },
            [&](const cmd::AddPerforated& c) {
                add_object(c.id, std::make_unique<PerforatedPolygonRsRt>(c.center, c.r_inner, c.r_outer, c.n));
            },
            [&](const cmd::AddChatoyant& c) {
                add_object(c.id, ChatoyantPolygonRsRt::regular(c.center, c.radius, c.n));
            },
            [&](const cmd::AddCircle& c) { add_object(c.id, std::make_unique<CircleRsRt>(c.center, c.radius)); },
            [&](const cmd::AddRing& c) {
                add_object(c.id, std::make_unique<RingRsRt>(c.center, c.r_inner, c.r_outer));
            },
            [&](const cmd::AddStrip& c) { add_object(c.id, std::make_unique<StripRsRt>(c.a, c.b, c.radius)); },
            [&](const cmd::AddCircPoly& c) {
                add_object(c.id,
                           std::make_unique<CircleInsidePolyRsRt>(c.center, c.radius, c.n, c.center, c.hole_radius));
            },
            [&](const cmd::AddHoles& c) { add_object(c.id, std::make_unique<AreaWithHoles>(c.rc, c.holes)); },
            [&](const cmd::AddWidget& c) {
                add_object(c.id, std::make_unique<WidgetProxy>(c.id, c.rc, c.min, c.max, c.movable));
            },
            [&](const cmd::AddLabel& c) { add_object(c.id, std::make_unique<RotatableLabel>(c.anchor, c.text)); },
            [&](const cmd::AddPrimitive& c) { add_object(c.id, std::make_unique<PrimitiveFigure>(c.shape, c.button)); },
            [&](const cmd::AddCommented& c) { add_object(c.id, std::make_unique<RectangleWithComments>(c.rc)); },
            [&](const cmd::AddComment& c) {
                auto& parent = expect<RectangleWithComments>(scene_.get(c.parent), c.parent, "a commented rectangle");
                if (m.caught()) throw Error(ErrorCode::SequenceError, "cannot add objects while one is caught");
                if (scene_.find(c.id)) throw Error(ErrorCode::DuplicateObject, "name '" + c.id + "' already used");
                scene_.name_object(c.id, parent.add_comment(c.center, c.text));
                scene_.renew_mover();
            },
            [&](const cmd::GroupElastic& c) {
                add_object(c.id, std::make_unique<ElasticGroup>(top_level_children(c.children), c.id));
            },
            [&](const cmd::GroupFrame& c) {
                add_object(c.id, std::make_unique<FrameGroup>(c.rc, c.range, c.id, top_level_children(c.children)));
            },
            [&](const cmd::GroupLinked& c) {
                add_object(c.id, std::make_unique<LinkedRectangles>(top_level_children(c.children)));
            },
            [&](const cmd::Plug& c) {
                if (m.caught()) throw Error(ErrorCode::SequenceError, "cannot plug a hole while an object is caught");
                expect<AreaWithHoles>(scene_.get(c.id), c.id, "an area with holes").plug_hole(c.index);
            },
            [&](const cmd::Press& c) { press(c.pt, c.button); },
            [&](const cmd::Drag& c) {
                last_pt_ = c.pt;
                if (!band_) m.move(c.pt);
            },
            [&](const cmd::Release&) { release(); },
            [&](const cmd::Sense& c) {
                const auto hit = m.sense(c.pt);
                result.cursor = hit ? hit->cursor : CursorHint::Default;
            },
            [&](const cmd::Select& c) { scene_.rubber_band_select(c.a, c.b); },
            [&](const cmd::Popup& c) {
                if (m.caught()) throw Error(ErrorCode::SequenceError, "cannot reorder while an object is caught");
                MoveableObject& obj = scene_.get(c.id);
                const auto index = m.index_of(obj.id());
                if (!index || obj.role() != ObjectRole::Figure) {
                    throw Error(ErrorCode::InvalidArgument, "'" + c.id + "' is not a figure in the queue");
                }
                scene_.bring_to_top(*index);
            },
            [&](const cmd::Renew&) {
                if (m.caught()) throw Error(ErrorCode::SequenceError, "cannot renew while an object is caught");
                scene_.renew_mover();
            },
            [&](const cmd::Dump&) { result.dump = scene_block(scene_); },
        },
        command);
    return result;
}

std::vector<std::string> run_scenario(const Scenario& scenario) {
    Session session;
    std::vector<std::string> dumps;
    for (const ScriptLine& line : scenario) {
        try {
            ExecResult r = session.execute(line.command);
            if (r.dump) dumps.push_back(std::move(*r.dump));
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            throw ScenarioError(line.line, e.code(), e.what());
        }
    }
    return dumps;
}

}  // namespace coverkit
