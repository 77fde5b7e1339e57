#pragma once

#include <string>
#include <vector>

#include "coverkit/figures/rectangle.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

struct SizeWH {
    double w = 0.0;
    double h = 0.0;
};

/// Per axis: resizable iff a maximum is set (> 0) and min < max.
Resizing derive_resizing(SizeWH min_size, SizeWH max_size);

/// Frame around an opaque rectangular widget.
///
/// Cover order: resize handles (corners for Any, mid-edge handles for each
/// active axis), then four band strips when movable, then the widget area
/// itself with freedom None so presses on the widget never reach objects below.
class WidgetProxy : public MoveableObject {
public:
    static constexpr double kDefaultFrameWidth = 6.0;
    static constexpr double kMinFrameWidth = 2.0;
    static constexpr double kDefaultHandleRadius = 4.0;

    WidgetProxy(std::string label, Rect rc, SizeWH min_size = {}, SizeWH max_size = {}, bool movable = true,
                double frame_width = kDefaultFrameWidth, double handle_radius = kDefaultHandleRadius);

    const std::string& label() const { return label_; }
    const Rect& rect() const { return rc_; }
    SizeWH min_size() const { return min_; }
    SizeWH max_size() const { return max_; }
    bool movable() const { return movable_; }
    double frame_width() const { return frame_width_; }
    Resizing resizing() const { return resizing_; }
    /// Part each cover node drives; RectPart::Area for bands, nullopt for the widget itself.
    const std::vector<std::optional<RectPart>>& node_parts() const { return parts_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "widget"; }
    ObjectRole role() const override { return ObjectRole::Control; }
    Rect bounds() const override { return rc_; }

private:
    SizeLimits limits() const;

    std::string label_;
    Rect rc_;
    SizeWH min_;
    SizeWH max_;
    bool movable_;
    double frame_width_;
    double handle_radius_;
    Resizing resizing_;
    std::vector<std::optional<RectPart>> parts_;
};

}  // namespace coverkit
