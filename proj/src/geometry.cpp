#include "coverkit/geometry.hpp"

#include <algorithm>

#include "coverkit/error.hpp"

namespace coverkit {

Rect Rect::from_corners(Point2 a, Point2 b) {
    const double l = std::min(a.x, b.x);
    const double t = std::min(a.y, b.y);
    return {l, t, std::max(a.x, b.x) - l, std::max(a.y, b.y) - t};
}

double distance(Point2 a, Point2 b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

Angle line_angle(Point2 from, Point2 to) {
    if (from == to) {
        throw Error(ErrorCode::DegenerateRay, "line_angle: coincident points");
    }
    // atan2 already yields (-pi, pi]
    return Angle{std::atan2(to.y - from.y, to.x - from.x)};
}

Angle limited_radian(Angle a) {
    constexpr double kTwoPi = 2 * kPi;
    double r = std::fmod(a.radians, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    } else if (r > kPi) {
        r -= kTwoPi;
    }
    return Angle{r};
}

Point2 point_to_point(Point2 origin, Angle a, double dist) {
    return {origin.x + dist * std::cos(a.radians), origin.y + dist * std::sin(a.radians)};
}

bool is_convex(std::span<const Point2> apexes) {
    const std::size_t n = apexes.size();
    if (n < 3) {
        throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 apexes");
    }
    bool has_pos = false;
    bool has_neg = false;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = apexes[i];
        const Point2 b = apexes[(i + 1) % n];
        const Point2 c = apexes[(i + 2) % n];
        const double cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        // Scale-aware tolerance: near-collinear turns count as zero.
        const double tol = 1e-12 * (std::abs(b.x - a.x) + std::abs(b.y - a.y)) *
                           (std::abs(c.x - b.x) + std::abs(c.y - b.y));
        if (cross > tol) has_pos = true;
        if (cross < -tol) has_neg = true;
        if (has_pos && has_neg) return false;
        const double dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
        turning += std::atan2(cross, dot);
    }
    // Same-sign turns can still wind twice (pentagram); a simple outline turns once.
    return std::abs(std::abs(turning) - 2 * kPi) < 1e-6 || (!has_pos && !has_neg);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) {
        return distance(p, a);
    }
    const double t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    return distance(p, {a.x + t * vx, a.y + t * vy});
}

Rect frame_around(std::span<const Rect> rects, double spaces) {
    if (rects.empty()) {
        throw Error(ErrorCode::EmptyInput, "frame_around: no rectangles");
    }
    double l = rects.front().left;
    double t = rects.front().top;
    double r = rects.front().right();
    double b = rects.front().bottom();
    for (const Rect& rc : rects.subspan(1)) {
        l = std::min(l, rc.left);
        t = std::min(t, rc.top);
        r = std::max(r, rc.right());
        b = std::max(b, rc.bottom());
    }
    return Rect{l, t, r - l, b - t}.inflated(spaces);
}

}  // namespace coverkit
