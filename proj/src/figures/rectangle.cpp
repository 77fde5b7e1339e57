#include "coverkit/figures/rectangle.hpp"

#include <algorithm>
#include <array>
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

}  // namespace

RectPart standard_rect_part(Resizing resize, int node) {
    static constexpr std::array kAny{RectPart::TopLeft, RectPart::TopRight, RectPart::BottomRight,
                                     RectPart::BottomLeft, RectPart::Top, RectPart::Right,
                                     RectPart::Bottom, RectPart::Left};
    switch (resize) {
        case Resizing::None:
            return RectPart::Area;
        case Resizing::NS:
            return node == 0 ? RectPart::Top : node == 1 ? RectPart::Bottom : RectPart::Area;
        case Resizing::WE:
            return node == 0 ? RectPart::Left : node == 1 ? RectPart::Right : RectPart::Area;
        case Resizing::Any:
            return node >= 0 && node < 8 ? kAny[static_cast<std::size_t>(node)] : RectPart::Area;
    }
    return RectPart::Area;
}

Rect drag_rect_part(const Rect& rc, RectPart part, double dx, double dy, const SizeLimits& limits) {
    if (part == RectPart::Area) return rc.translated(dx, dy);

    const bool moves_left = part == RectPart::Left || part == RectPart::TopLeft || part == RectPart::BottomLeft;
    const bool moves_right = part == RectPart::Right || part == RectPart::TopRight || part == RectPart::BottomRight;
    const bool moves_top = part == RectPart::Top || part == RectPart::TopLeft || part == RectPart::TopRight;
    const bool moves_bottom = part == RectPart::Bottom || part == RectPart::BottomLeft || part == RectPart::BottomRight;

    // Already out-of-range sizes are never forced back by an unrelated axis.
    const auto clamp_w = [&](double w) { return std::clamp(w, std::min(limits.min_w, rc.width), std::max(limits.max_w, rc.width)); };
    const auto clamp_h = [&](double h) { return std::clamp(h, std::min(limits.min_h, rc.height), std::max(limits.max_h, rc.height)); };

    Rect out = rc;
    if (moves_left) {
        out.width = clamp_w(rc.width - dx);
        out.left = rc.right() - out.width;
    } else if (moves_right) {
        out.width = clamp_w(rc.width + dx);
    }
    if (moves_top) {
        out.height = clamp_h(rc.height - dy);
        out.top = rc.bottom() - out.height;
    } else if (moves_bottom) {
        out.height = clamp_h(rc.height + dy);
    }
    return out;
}

PrimitiveFigure::PrimitiveFigure(Shape shape, std::optional<MouseButton> allowed_button)
    : shape_(std::move(shape)), allowed_button_(allowed_button) {
    define_cover();
}

void PrimitiveFigure::define_cover() {
    const MovementFreedom f = MovementFreedom::All;
    const CursorHint c = CursorHint::SizeAll;
    set_cover(Cover({std::visit(Overloaded{
                                    [&](const Circle& s) { return circle_node(s.center, s.radius, f, c); },
                                    [&](const RectFig& s) { return rect_node(s.rc, f, c); },
                                    [&](const StripFig& s) { return strip_node(s.a, s.b, s.radius, f, c); },
                                },
                                shape_)}));
}

void PrimitiveFigure::move_by(double dx, double dy) {
    const Point2 d{dx, dy};
    std::visit(Overloaded{
                   [&](Circle& s) { s.center = s.center + d; },
                   [&](RectFig& s) { s.rc = s.rc.translated(dx, dy); },
                   [&](StripFig& s) {
                       s.a = s.a + d;
                       s.b = s.b + d;
                   },
               },
               shape_);
    define_cover();
}

bool PrimitiveFigure::move_node(int /*node*/, double dx, double dy, Point2 /*pt*/, MouseButton catcher) {
    if (allowed_button_ && *allowed_button_ != catcher) return false;
    move_by(dx, dy);
    return true;
}

std::string_view PrimitiveFigure::kind() const {
    return std::visit(Overloaded{
                          [](const Circle&) { return std::string_view("pcircle"); },
                          [](const RectFig&) { return std::string_view("prect"); },
                          [](const StripFig&) { return std::string_view("pstrip"); },
                      },
                      shape_);
}

Rect PrimitiveFigure::bounds() const {
    return std::visit(Overloaded{
                          [](const Circle& s) {
                              return Rect{s.center.x - s.radius, s.center.y - s.radius, 2 * s.radius, 2 * s.radius};
                          },
                          [](const RectFig& s) { return s.rc; },
                          [](const StripFig& s) {
                              return Rect::from_corners(s.a, s.b).inflated(s.radius);
                          },
                      },
                      shape_);
}

void PrimitiveFigure::describe_geometry(GeometryWriter& out) const {
    std::visit(Overloaded{
                   [&](const Circle& s) { out.point(s.center).real(s.radius); },
                   [](const RectFig&) {},
                   [&](const StripFig& s) { out.point(s.a).point(s.b).real(s.radius); },
               },
               shape_);
}

RectangleStandard::RectangleStandard(Rect rc, Resizing resizing, double min_width, double min_height)
    : rc_(rc), resizing_(resizing), min_w_(min_width), min_h_(min_height) {
    if (!(min_width > 0.0) || !(min_height > 0.0) || rc.width < min_width || rc.height < min_height) {
        throw Error(ErrorCode::InvalidArgument, "rectangle smaller than its minimum size");
    }
    define_cover();
}

void RectangleStandard::define_cover() {
    set_cover(standard_rect_cover(rc_, resizing_));
}

void RectangleStandard::move_by(double dx, double dy) {
    const Rect old = rc_;
    rc_ = rc_.translated(dx, dy);
    define_cover();
    rect_changed(old);
}

bool RectangleStandard::move_node(int node, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    const RectPart part = standard_rect_part(resizing_, node);
    if (part == RectPart::Area) {
        move_by(dx, dy);
        return true;
    }
    const Rect old = rc_;
    rc_ = drag_rect_part(rc_, part, dx, dy, SizeLimits{min_w_, min_h_});
    define_cover();
    rect_changed(old);
    return true;
}

}  // namespace coverkit
