#pragma once

#include <cstddef>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/figures/common.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

/// max(8, ceil(2*pi*radius / 8)).
std::size_t nnode_border_count(double radius);

/// Overlapping small circles (radius 5) every 8 px of arc along a circle,
/// starting at angle 0. Throws InvalidArgument for radius <= 0.
std::vector<CoverNode> nnode_border(Point2 center, double radius);

/// max(8, ceil(2*pi*r_outer / 12)).
std::size_t ring_sector_count(double r_outer);

/// Ring cover: M outer-border trapezes (r_outer +- 4), M inner-border
/// trapezes (r_inner +- 4), then M area trapezes spanning r_inner..r_outer.
/// Throws InvalidRing unless 0 < r_inner < r_outer.
Cover ring_cover(Point2 center, double r_inner, double r_outer);

/// Figure whose cover size depends on its size. Resizing only mutates
/// geometry during a drag; the cover is rebuilt when the mover releases it.
class NNodeFigure : public MoveableObject {
public:
    bool pending_rebuild() const { return pending_rebuild_; }
    void on_release() override;

    /// Node count the cover will have once rebuilt for the current geometry.
    virtual std::size_t expected_node_count() const = 0;

protected:
    void defer_rebuild() { pending_rebuild_ = true; }

private:
    bool pending_rebuild_ = false;
};

/// Cover: border circles, then one big circle of radius - 5.
class CircleRsRt : public NNodeFigure {
public:
    CircleRsRt(Point2 center, double radius);

    Point2 center() const { return center_; }
    double radius() const { return radius_; }

    std::size_t expected_node_count() const override;
    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    std::string_view kind() const override { return "circle"; }
    Rect bounds() const override;
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 center_;
    double radius_;
    ScaleTracker scale_;
};

class RingRsRt : public NNodeFigure {
public:
    RingRsRt(Point2 center, double r_inner, double r_outer);

    Point2 center() const { return center_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }

    std::size_t expected_node_count() const override;
    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    std::string_view kind() const override { return "ring"; }
    Rect bounds() const override;
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 center_;
    double r_inner_;
    double r_outer_;
    ScaleTracker scale_;
};

/// Rotatable strip. Cover: two side strips (width), a fan of small circles
/// around each cap (length), then the strip itself (move).
class StripRsRt : public NNodeFigure {
public:
    StripRsRt(Point2 c0, Point2 c1, double radius);

    Point2 c0() const { return c0_; }
    Point2 c1() const { return c1_; }
    double radius() const { return radius_; }
    double length() const { return distance(c0_, c1_); }
    Point2 center() const { return (c0_ + c1_) * 0.5; }
    const RotationTracker& rotation() const { return rotation_; }

    /// max(3, ceil(pi * radius / 8) + 1) circles per cap.
    static std::size_t fan_count(double radius);

    std::size_t expected_node_count() const override;
    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "strip"; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    enum class Grip { None, Side, CapStart, CapEnd };

    double axis_distance(Point2 p) const;
    /// Signed position of p along the axis, measured from c0 toward c1.
    double axis_position(Point2 p) const;

    Point2 c0_;
    Point2 c1_;
    double radius_;
    Angle angle_;
    RotationTracker rotation_;
    double rot_length_ = 0.0;
    Grip grip_ = Grip::None;
    double grip_ratio_ = 1.0;
    double grip_offset_ = 0.0;
};

/// Regular polygon with a circular hole. Cover: hole-border circles, one
/// strip per polygon side, the hole (Transparent), then the polygon.
class CircleInsidePolyRsRt : public NNodeFigure {
public:
    CircleInsidePolyRsRt(Point2 center, double poly_radius, int n_apexes, Point2 hole_center,
                         double hole_radius, Angle angle = Angle{});

    Point2 center() const { return center_; }
    double poly_radius() const { return poly_radius_; }
    int n_apexes() const { return n_; }
    double hole_radius() const { return hole_radius_; }
    Point2 hole_center() const;
    std::vector<Point2> apexes() const;

    std::size_t expected_node_count() const override;
    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "circpoly"; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    double inradius() const;

    Point2 center_;
    double poly_radius_;
    int n_;
    Angle angle_;
    // Hole center in polar form relative to the polygon's base angle.
    double hole_dist_;
    Angle hole_dir_;
    double hole_radius_;
    RotationTracker rotation_;
    ScaleTracker scale_;
};

}  // namespace coverkit
