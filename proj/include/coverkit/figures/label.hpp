#pragma once

#include <string>

#include "coverkit/figures/common.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

inline constexpr double kCharWidth = 8.0;
inline constexpr double kCharHeight = 16.0;

/// Text line rotating about its middle. Cover: a single strip from the
/// anchor along the text direction, half-height thick.
class RotatableLabel : public MoveableObject {
public:
    RotatableLabel(Point2 anchor, std::string text, Angle angle = Angle{});

    Point2 anchor() const { return anchor_; }
    const std::string& text() const { return text_; }
    double text_length() const { return kCharWidth * static_cast<double>(text_.size()); }
    Point2 center() const { return point_to_point(anchor_, angle_, text_length() / 2); }
    const RotationTracker& rotation() const { return rotation_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "label"; }
    ObjectRole role() const override { return ObjectRole::Info; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 anchor_;
    std::string text_;
    Angle angle_;
    RotationTracker rotation_;
};

}  // namespace coverkit
