#include "coverkit/widgets.hpp"

#include <algorithm>
#include <limits>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

bool axis_active(double min_v, double max_v) {
    return max_v > 0.0 && min_v < max_v;
}

Point2 mid(Point2 a, Point2 b) {
    return (a + b) * 0.5;
}

}  // namespace

Resizing derive_resizing(SizeWH min_size, SizeWH max_size) {
    const bool w = axis_active(min_size.w, max_size.w);
    const bool h = axis_active(min_size.h, max_size.h);
    if (w && h) return Resizing::Any;
    if (w) return Resizing::WE;
    if (h) return Resizing::NS;
    return Resizing::None;
}

WidgetProxy::WidgetProxy(std::string label, Rect rc, SizeWH min_size, SizeWH max_size, bool movable,
                         double frame_width, double handle_radius)
    : label_(std::move(label)),
      rc_(rc),
      min_(min_size),
      max_(max_size),
      movable_(movable),
      frame_width_(std::max(kMinFrameWidth, frame_width)),
      handle_radius_(handle_radius),
      resizing_(derive_resizing(min_size, max_size)) {
    if (!(rc.width > 0.0) || !(rc.height > 0.0) || !(handle_radius > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "widget needs a positive size and handle radius");
    }
    const SizeLimits lim = limits();
    const bool w_ok = !axis_active(min_.w, max_.w) || (rc.width >= lim.min_w && rc.width <= lim.max_w);
    const bool h_ok = !axis_active(min_.h, max_.h) || (rc.height >= lim.min_h && rc.height <= lim.max_h);
    if (!w_ok || !h_ok) {
        throw Error(ErrorCode::InvalidArgument, "widget size outside its min/max limits");
    }
    define_cover();
}

SizeLimits WidgetProxy::limits() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    // Unset minimums fall back to the global floor, never above the maximum.
    const auto lo = [](double min_v, double max_v) {
        const double m = min_v > 0.0 ? min_v : kMinSize;
        return max_v > 0.0 ? std::min(m, max_v) : m;
    };
    return SizeLimits{lo(min_.w, max_.w), lo(min_.h, max_.h), max_.w > 0.0 ? max_.w : inf,
                      max_.h > 0.0 ? max_.h : inf};
}

void WidgetProxy::define_cover() {
    const Point2 tl = rc_.top_left();
    const Point2 tr = rc_.top_right();
    const Point2 br = rc_.bottom_right();
    const Point2 bl = rc_.bottom_left();
    const bool w = resizing_ == Resizing::WE || resizing_ == Resizing::Any;
    const bool h = resizing_ == Resizing::NS || resizing_ == Resizing::Any;

    std::vector<CoverNode> nodes;
    parts_.clear();
    const auto handle = [&](Point2 at, RectPart part, MovementFreedom f, CursorHint c) {
        nodes.push_back(circle_node(at, handle_radius_, f, c));
        parts_.emplace_back(part);
    };
    if (resizing_ == Resizing::Any) {
        handle(tl, RectPart::TopLeft, MovementFreedom::All, CursorHint::Hand);
        handle(tr, RectPart::TopRight, MovementFreedom::All, CursorHint::Hand);
        handle(br, RectPart::BottomRight, MovementFreedom::All, CursorHint::Hand);
        handle(bl, RectPart::BottomLeft, MovementFreedom::All, CursorHint::Hand);
    }
    if (h) handle(mid(tl, tr), RectPart::Top, MovementFreedom::NS, CursorHint::SizeNS);
    if (w) handle(mid(tr, br), RectPart::Right, MovementFreedom::WE, CursorHint::SizeWE);
    if (h) handle(mid(bl, br), RectPart::Bottom, MovementFreedom::NS, CursorHint::SizeNS);
    if (w) handle(mid(tl, bl), RectPart::Left, MovementFreedom::WE, CursorHint::SizeWE);
    if (movable_) {
        const double half = frame_width_ / 2;
        for (const auto& [a, b] : {std::pair{tl, tr}, std::pair{tr, br}, std::pair{br, bl}, std::pair{bl, tl}}) {
            nodes.push_back(strip_node(a, b, half, MovementFreedom::All, CursorHint::SizeAll));
            parts_.emplace_back(RectPart::Area);
        }
    }
    nodes.push_back(rect_node(rc_, MovementFreedom::None, CursorHint::Default));
    parts_.emplace_back(std::nullopt);
    set_cover(Cover(std::move(nodes)));
}

void WidgetProxy::move_by(double dx, double dy) {
    rc_ = rc_.translated(dx, dy);
    define_cover();
}

bool WidgetProxy::move_node(int node, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    if (node < 0 || static_cast<std::size_t>(node) >= parts_.size() || !parts_[static_cast<std::size_t>(node)]) {
        return false;
    }
    rc_ = drag_rect_part(rc_, *parts_[static_cast<std::size_t>(node)], dx, dy, limits());
    define_cover();
    return true;
}

}  // namespace coverkit
