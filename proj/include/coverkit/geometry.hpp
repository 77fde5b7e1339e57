#pragma once

#include <cmath>
#include <numbers>
#include <span>

namespace coverkit {

/// Screen-space point. y grows downward.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(Point2 a, double k) { return {a.x * k, a.y * k}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

/// Angle in radians. Positive angles turn from +x toward +y (clockwise on screen).
struct Angle {
    double radians = 0.0;

    constexpr Angle() = default;
    constexpr explicit Angle(double r) : radians(r) {}

    friend constexpr Angle operator+(Angle a, Angle b) { return Angle{a.radians + b.radians}; }
    friend constexpr Angle operator-(Angle a, Angle b) { return Angle{a.radians - b.radians}; }
    friend constexpr Angle operator-(Angle a) { return Angle{-a.radians}; }
    friend constexpr bool operator==(Angle, Angle) = default;
};

inline constexpr double kPi = std::numbers::pi;

struct Rect {
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;

    constexpr double right() const { return left + width; }
    constexpr double bottom() const { return top + height; }
    constexpr Point2 center() const { return {left + width / 2, top + height / 2}; }
    constexpr Point2 top_left() const { return {left, top}; }
    constexpr Point2 top_right() const { return {right(), top}; }
    constexpr Point2 bottom_right() const { return {right(), bottom()}; }
    constexpr Point2 bottom_left() const { return {left, bottom()}; }

    constexpr bool contains(Point2 p) const {
        return p.x >= left && p.x <= right() && p.y >= top && p.y <= bottom();
    }
    constexpr bool contains(const Rect& r) const {
        return r.left >= left && r.right() <= right() && r.top >= top && r.bottom() <= bottom();
    }
    constexpr Rect translated(double dx, double dy) const { return {left + dx, top + dy, width, height}; }
    constexpr Rect inflated(double d) const { return {left - d, top - d, width + 2 * d, height + 2 * d}; }

    /// Normalized rectangle spanned by two opposite corners.
    static Rect from_corners(Point2 a, Point2 b);

    friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

double distance(Point2 a, Point2 b);

/// Direction of the ray from -> to, in (-pi, pi]. Throws DegenerateRay when from == to.
Angle line_angle(Point2 from, Point2 to);

/// Reduces `a` into (-pi, pi].
Angle limited_radian(Angle a);

Point2 point_to_point(Point2 origin, Angle a, double dist);

/// True when every turn of the closed apex loop has the same sign and the loop
/// winds exactly once; collinear turns are tolerated, and a fully collinear
/// loop counts as a degenerate convex polygon. Throws InvalidPolygon for fewer
/// than 3 apexes.
bool is_convex(std::span<const Point2> apexes);

double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Bounding box of `rects` inflated by `spaces` on every side.
Rect frame_around(std::span<const Rect> rects, double spaces);

}  // namespace coverkit
