#pragma once

#include <limits>
#include <optional>
#include <variant>

#include "coverkit/cover.hpp"
#include "coverkit/figures/common.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

enum class RectPart { Area, Top, Right, Bottom, Left, TopLeft, TopRight, BottomRight, BottomLeft };

/// Part of the rectangle that node `node` of standard_rect_cover(rc, resize) controls.
RectPart standard_rect_part(Resizing resize, int node);

struct SizeLimits {
    double min_w = kMinSize;
    double min_h = kMinSize;
    double max_w = std::numeric_limits<double>::infinity();
    double max_h = std::numeric_limits<double>::infinity();
};

/// Applies a drag of `part` by (dx, dy). Edges move independently; the
/// opposite edge stays put and the size is clamped into `limits`.
Rect drag_rect_part(const Rect& rc, RectPart part, double dx, double dy, const SizeLimits& limits);

/// Single-node figure: circle, rectangle or strip that only moves.
class PrimitiveFigure : public MoveableObject {
public:
    struct Circle {
        Point2 center;
        double radius = 0.0;
    };
    struct RectFig {
        Rect rc;
    };
    struct StripFig {
        Point2 a;
        Point2 b;
        double radius = 0.0;
    };
    using Shape = std::variant<Circle, RectFig, StripFig>;

    /// `allowed_button` restricts which button may drag the figure.
    explicit PrimitiveFigure(Shape shape, std::optional<MouseButton> allowed_button = std::nullopt);

    const Shape& shape() const { return shape_; }
    std::optional<MouseButton> allowed_button() const { return allowed_button_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override;
    Rect bounds() const override;
    void describe_geometry(GeometryWriter& out) const override;

private:
    Shape shape_;
    std::optional<MouseButton> allowed_button_;
};

/// Rectangle with one of the four standard resizing layouts.
class RectangleStandard : public MoveableObject {
public:
    RectangleStandard(Rect rc, Resizing resizing, double min_width = kMinSize, double min_height = kMinSize);

    const Rect& rect() const { return rc_; }
    Resizing resizing() const { return resizing_; }
    double min_width() const { return min_w_; }
    double min_height() const { return min_h_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "rect"; }
    Rect bounds() const override { return rc_; }

protected:
    /// Called after every change of the rectangle (subclasses keep dependants in sync).
    virtual void rect_changed(const Rect& /*old_rc*/) {}

private:
    Rect rc_;
    Resizing resizing_;
    double min_w_;
    double min_h_;
};

}  // namespace coverkit
