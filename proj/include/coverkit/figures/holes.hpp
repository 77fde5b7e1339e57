#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "coverkit/moveable.hpp"

namespace coverkit {

/// Rectangular area with see-through holes. Cover: one Transparent node per
/// hole, then the whole area; always holes().size() + 1 nodes.
class AreaWithHoles : public MoveableObject {
public:
    struct CircleHole {
        Point2 center;
        double radius = 0.0;
    };
    struct PolyHole {
        std::vector<Point2> apexes;
    };
    using Hole = std::variant<CircleHole, PolyHole>;

    /// Throws InvalidHole for non-convex polygons or holes leaving rc.
    AreaWithHoles(Rect rc, std::vector<Hole> holes = {});

    const Rect& rect() const { return rc_; }
    const std::vector<Hole>& holes() const { return holes_; }

    void plug_hole(std::size_t index);

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "holes"; }
    Rect bounds() const override { return rc_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    Rect rc_;
    std::vector<Hole> holes_;
};

}  // namespace coverkit
