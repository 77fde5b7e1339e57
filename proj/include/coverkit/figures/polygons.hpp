#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "coverkit/figures/common.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

/// Apexes of the regular n-gon with apex 0 in direction `angle`.
std::vector<Point2> regular_apexes(Point2 center, double radius, int n, Angle angle);

/// Cover: one side strip per edge when resizable, then the polygon itself.
/// Left drag on a strip scales about the center; Right drag rotates.
class RegularPolygonRsRt : public MoveableObject {
public:
    RegularPolygonRsRt(Point2 center, double radius, int n_apexes, Angle angle = Angle{},
                       bool resizable = true, bool rotatable = true);

    Point2 center() const { return center_; }
    double radius() const { return radius_; }
    int n_apexes() const { return n_; }
    bool resizable() const { return resizable_; }
    bool rotatable() const { return rotatable_; }
    std::vector<Point2> apexes() const { return regular_apexes(center_, radius_, n_, angle_); }
    const RotationTracker& rotation() const { return rotation_; }
    double start_ratio() const { return scale_.ratio(); }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "polygon"; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 center_;
    double radius_;
    int n_;
    Angle angle_;
    bool resizable_;
    bool rotatable_;
    RotationTracker rotation_;
    ScaleTracker scale_;
};

/// Regular polygon with a similar regular hole.
/// Cover: outer strips [0, n), inner strips [n, 2n), ring trapezes [2n, 3n).
class PerforatedPolygonRsRt : public MoveableObject {
public:
    PerforatedPolygonRsRt(Point2 center, double r_inner, double r_outer, int n_apexes,
                          Angle angle = Angle{}, bool rotatable = true);

    Point2 center() const { return center_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }
    int n_apexes() const { return n_; }
    std::vector<Point2> outer_apexes() const { return regular_apexes(center_, r_outer_, n_, angle_); }
    std::vector<Point2> inner_apexes() const { return regular_apexes(center_, r_inner_, n_, angle_); }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "perforated"; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 center_;
    double r_inner_;
    double r_outer_;
    int n_;
    Angle angle_;
    bool rotatable_;
    RotationTracker rotation_;
    ScaleTracker scale_;
};

/// Polygon assembled from (center, apex i, apex i+1) triangles; apexes and the
/// center move individually.
/// Cover: apex circles [0, n), center circle n, side strips [n+1, 2n],
/// triangles [2n+1, 3n].
class ChatoyantPolygonRsRt : public MoveableObject {
public:
    ChatoyantPolygonRsRt(Point2 center, std::vector<Point2> apexes, Angle angle = Angle{},
                         bool rotatable = true);
    static std::unique_ptr<ChatoyantPolygonRsRt> regular(Point2 center, double radius, int n, Angle angle = Angle{});

    Point2 center() const { return center_; }
    const std::vector<Point2>& apexes() const { return apexes_; }
    std::size_t n_apexes() const { return apexes_.size(); }
    /// Opaque per-triangle colour payload, never consulted by behaviour.
    std::vector<std::string>& colors() { return colors_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_resizing(Point2 pt, int node, ShapeKind shape) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "chatoyant"; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    Point2 center_;
    std::vector<Point2> apexes_;
    Angle angle_;
    bool rotatable_;
    std::vector<std::string> colors_;
    RotationTracker rotation_;
    // Snapshot at press: apex offsets from the center, rotation start angle,
    // press distance and the smallest allowed scale factor.
    std::vector<Point2> offsets_;
    Angle angle0_;
    double press_dist_ = 0.0;
    double min_factor_ = 0.0;
};

}  // namespace coverkit
