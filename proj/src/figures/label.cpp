#include "coverkit/figures/label.hpp"

namespace coverkit {

RotatableLabel::RotatableLabel(Point2 anchor, std::string text, Angle angle)
    : anchor_(anchor), text_(std::move(text)), angle_(limited_radian(angle)) {
    define_cover();
}

void RotatableLabel::define_cover() {
    const Point2 end = point_to_point(anchor_, angle_, text_length());
    set_cover(Cover({strip_node(anchor_, end, kCharHeight / 2, MovementFreedom::All, CursorHint::SizeAll)}));
}

void RotatableLabel::move_by(double dx, double dy) {
    anchor_ = anchor_ + Point2{dx, dy};
    define_cover();
}

void RotatableLabel::start_rotation(Point2 pt) {
    rotation_.start(center(), angle_, pt);
}

bool RotatableLabel::move_node(int /*node*/, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Left) {
        move_by(dx, dy);
        return true;
    }
    if (const auto a = rotation_.step(pt)) {
        angle_ = limited_radian(*a);
        anchor_ = point_to_point(rotation_.center(), angle_ + Angle{kPi}, text_length() / 2);
        define_cover();
    }
    return true;
}

Rect RotatableLabel::bounds() const {
    return Rect::from_corners(anchor_, point_to_point(anchor_, angle_, text_length())).inflated(kCharHeight / 2);
}

void RotatableLabel::describe_geometry(GeometryWriter& out) const {
    out.point(anchor_).point(point_to_point(anchor_, angle_, text_length()));
}

}  // namespace coverkit
