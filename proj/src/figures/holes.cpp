#include "coverkit/figures/holes.hpp"

#include <string>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate_hole(const Rect& rc, const AreaWithHoles::Hole& hole) {
    std::visit(Overloaded{
                   [&](const AreaWithHoles::CircleHole& c) {
                       const Rect box{c.center.x - c.radius, c.center.y - c.radius, 2 * c.radius, 2 * c.radius};
                       if (!(c.radius > 0.0) || !rc.contains(box)) {
                           throw Error(ErrorCode::InvalidHole, "circle hole must have positive radius and lie inside the area");
                       }
                   },
                   [&](const AreaWithHoles::PolyHole& p) {
                       bool convex = false;
                       try {
                           convex = is_convex(p.apexes);
                       } catch (const Error&) {
                           convex = false;
                       }
                       if (!convex) throw Error(ErrorCode::InvalidHole, "polygon hole must be convex");
                       for (const Point2 q : p.apexes) {
                           if (!rc.contains(q)) throw Error(ErrorCode::InvalidHole, "polygon hole must lie inside the area");
                       }
                   },
               },
               hole);
}

}  // namespace

AreaWithHoles::AreaWithHoles(Rect rc, std::vector<Hole> holes) : rc_(rc), holes_(std::move(holes)) {
    if (!(rc.width > 0.0) || !(rc.height > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "area must have positive size");
    }
    for (const Hole& h : holes_) validate_hole(rc_, h);
    define_cover();
}

void AreaWithHoles::plug_hole(std::size_t index) {
    if (index >= holes_.size()) {
        throw Error(ErrorCode::OutOfRange, "no hole " + std::to_string(index));
    }
    holes_.erase(holes_.begin() + static_cast<std::ptrdiff_t>(index));
    define_cover();
}

void AreaWithHoles::define_cover() {
    std::vector<CoverNode> nodes;
    nodes.reserve(holes_.size() + 1);
    for (const Hole& h : holes_) {
        nodes.push_back(std::visit(
            Overloaded{
                [](const CircleHole& c) {
                    return circle_node(c.center, c.radius, MovementFreedom::Transparent, CursorHint::Default);
                },
                [](const PolyHole& p) {
                    return polygon_node(p.apexes, MovementFreedom::Transparent, CursorHint::Default);
                },
            },
            h));
    }
    nodes.push_back(rect_node(rc_));
    set_cover(Cover(std::move(nodes)));
}

void AreaWithHoles::move_by(double dx, double dy) {
    const Point2 d{dx, dy};
    rc_ = rc_.translated(dx, dy);
    for (Hole& h : holes_) {
        std::visit(Overloaded{
                       [&](CircleHole& c) { c.center = c.center + d; },
                       [&](PolyHole& p) {
                           for (Point2& q : p.apexes) q = q + d;
                       },
                   },
                   h);
    }
    define_cover();
}

bool AreaWithHoles::move_node(int /*node*/, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    move_by(dx, dy);
    return true;
}

void AreaWithHoles::describe_geometry(GeometryWriter& out) const {
    for (const Hole& h : holes_) {
        std::visit(Overloaded{
                       [&](const CircleHole& c) { out.word("circle").point(c.center).real(c.radius); },
                       [&](const PolyHole& p) {
                           out.word("poly").real(static_cast<double>(p.apexes.size()));
                           for (const Point2 q : p.apexes) out.point(q);
                       },
                   },
                   h);
    }
}

}  // namespace coverkit
