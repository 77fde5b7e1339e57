#include "coverkit/figures/nnode.hpp"

#include <algorithm>
#include <cmath>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

Rect circle_bounds(Point2 c, double r) {
    return {c.x - r, c.y - r, 2 * r, 2 * r};
}

/// Trapeze between radii r0 < r1 over the sector [a0, a1].
CoverNode sector_trapeze(Point2 c, double r0, double r1, Angle a0, Angle a1, CursorHint cursor) {
    return polygon_node({point_to_point(c, a0, r0), point_to_point(c, a0, r1), point_to_point(c, a1, r1),
                         point_to_point(c, a1, r0)},
                        MovementFreedom::All, cursor);
}

}  // namespace

std::size_t nnode_border_count(double radius) {
    return std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(2 * kPi * radius / kArcSpacing)));
}

std::vector<CoverNode> nnode_border(Point2 center, double radius) {
    if (!(radius > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "nnode_border radius must be positive");
    }
    const std::size_t count = nnode_border_count(radius);
    std::vector<CoverNode> nodes;
    nodes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Angle a{2 * kPi * static_cast<double>(i) / static_cast<double>(count)};
        nodes.push_back(circle_node(point_to_point(center, a, radius), kSmallNodeRadius));
    }
    return nodes;
}

std::size_t ring_sector_count(double r_outer) {
    return std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(2 * kPi * r_outer / kRingSectorSpacing)));
}

Cover ring_cover(Point2 center, double r_inner, double r_outer) {
    if (!(r_inner > 0.0) || !(r_inner < r_outer)) {
        throw Error(ErrorCode::InvalidRing, "ring needs 0 < r_inner < r_outer");
    }
    const std::size_t m = ring_sector_count(r_outer);
    const auto sector = [m](std::size_t i) { return Angle{2 * kPi * static_cast<double>(i) / static_cast<double>(m)}; };
    const double inner_lo = std::max(r_inner - kBorderHalfDepth, r_inner / 2);
    std::vector<CoverNode> nodes;
    nodes.reserve(3 * m);
    for (std::size_t i = 0; i < m; ++i) {
        nodes.push_back(sector_trapeze(center, r_outer - kBorderHalfDepth, r_outer + kBorderHalfDepth, sector(i),
                                       sector(i + 1), CursorHint::Hand));
    }
    for (std::size_t i = 0; i < m; ++i) {
        nodes.push_back(sector_trapeze(center, inner_lo, r_inner + kBorderHalfDepth, sector(i), sector(i + 1),
                                       CursorHint::Hand));
    }
    for (std::size_t i = 0; i < m; ++i) {
        nodes.push_back(sector_trapeze(center, r_inner, r_outer, sector(i), sector(i + 1), CursorHint::SizeAll));
    }
    return Cover(std::move(nodes));
}

void NNodeFigure::on_release() {
    if (pending_rebuild_) {
        pending_rebuild_ = false;
        define_cover();
    }
}

// ---------------------------------------------------------------- CircleRsRt

CircleRsRt::CircleRsRt(Point2 center, double radius) : center_(center), radius_(radius) {
    if (radius < kMinSize) {
        throw Error(ErrorCode::InvalidArgument, "circle radius must be >= 10");
    }
    define_cover();
}

std::size_t CircleRsRt::expected_node_count() const {
    return nnode_border_count(radius_) + 1;
}

void CircleRsRt::define_cover() {
    auto nodes = nnode_border(center_, radius_);
    nodes.push_back(circle_node(center_, radius_ - kSmallNodeRadius, MovementFreedom::All, CursorHint::SizeAll));
    set_cover(Cover(std::move(nodes)));
}

void CircleRsRt::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    define_cover();
}

void CircleRsRt::start_resizing(Point2 pt, int /*node*/, ShapeKind /*shape*/) {
    scale_.start(radius_, center_, pt);
}

bool CircleRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) return false;
    if (static_cast<std::size_t>(node) + 1 < cover().size()) {
        radius_ = std::max(kMinSize, scale_.value_at(center_, pt));
        defer_rebuild();
        return true;
    }
    move_by(dx, dy);
    return true;
}

Rect CircleRsRt::bounds() const {
    return circle_bounds(center_, radius_);
}

void CircleRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_).real(radius_);
}

// ---------------------------------------------------------------- RingRsRt

RingRsRt::RingRsRt(Point2 center, double r_inner, double r_outer)
    : center_(center), r_inner_(r_inner), r_outer_(r_outer) {
    if (!(r_inner < r_outer)) {
        throw Error(ErrorCode::InvalidRing, "ring needs r_inner < r_outer");
    }
    if (r_inner < kMinSize || r_outer - r_inner < kMinRingGap) {
        throw Error(ErrorCode::InvalidRing, "ring needs r_inner >= 10 and width >= 8");
    }
    define_cover();
}

std::size_t RingRsRt::expected_node_count() const {
    return 3 * ring_sector_count(r_outer_);
}

void RingRsRt::define_cover() {
    set_cover(ring_cover(center_, r_inner_, r_outer_));
}

void RingRsRt::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    define_cover();
}

void RingRsRt::start_resizing(Point2 pt, int node, ShapeKind /*shape*/) {
    const std::size_t m = cover().size() / 3;
    scale_.start(static_cast<std::size_t>(node) < m ? r_outer_ : r_inner_, center_, pt);
}

bool RingRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) return false;
    const std::size_t m = cover().size() / 3;
    const auto i = static_cast<std::size_t>(node);
    if (i < m) {
        r_outer_ = std::max(r_inner_ + kMinRingGap, scale_.value_at(center_, pt));
    } else if (i < 2 * m) {
        r_inner_ = std::clamp(scale_.value_at(center_, pt), kMinSize, r_outer_ - kMinRingGap);
    } else {
        move_by(dx, dy);
        return true;
    }
    defer_rebuild();
    return true;
}

Rect RingRsRt::bounds() const {
    return circle_bounds(center_, r_outer_);
}

void RingRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_).real(r_inner_).real(r_outer_);
}

// ---------------------------------------------------------------- StripRsRt

StripRsRt::StripRsRt(Point2 c0, Point2 c1, double radius) : c0_(c0), c1_(c1), radius_(radius) {
    if (radius < kMinSize || distance(c0, c1) < kMinSize) {
        throw Error(ErrorCode::InvalidArgument, "strip needs radius >= 10 and length >= 10");
    }
    angle_ = line_angle(c0, c1);
    define_cover();
}

std::size_t StripRsRt::fan_count(double radius) {
    return std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(kPi * radius / kArcSpacing)) + 1);
}

std::size_t StripRsRt::expected_node_count() const {
    return 2 * fan_count(radius_) + 3;
}

void StripRsRt::define_cover() {
    const Angle normal = angle_ + Angle{kPi / 2};
    const Point2 off = point_to_point({}, normal, radius_);
    std::vector<CoverNode> nodes;
    nodes.push_back(strip_node(c0_ + off, c1_ + off, kSmallNodeRadius));
    nodes.push_back(strip_node(c0_ - off, c1_ - off, kSmallNodeRadius));
    const std::size_t m = fan_count(radius_);
    const auto fan = [&](Point2 cap, Angle from) {
        for (std::size_t k = 0; k < m; ++k) {
            const Angle a = from + Angle{kPi * static_cast<double>(k) / static_cast<double>(m - 1)};
            nodes.push_back(circle_node(point_to_point(cap, a, radius_), kSmallNodeRadius));
        }
    };
    fan(c0_, angle_ + Angle{kPi / 2});
    fan(c1_, angle_ - Angle{kPi / 2});
    nodes.push_back(strip_node(c0_, c1_, radius_, MovementFreedom::All, CursorHint::SizeAll));
    set_cover(Cover(std::move(nodes)));
}

void StripRsRt::move_by(double dx, double dy) {
    const Point2 d{dx, dy};
    c0_ = c0_ + d;
    c1_ = c1_ + d;
    define_cover();
}

double StripRsRt::axis_distance(Point2 p) const {
    const Point2 u = point_to_point({}, angle_, 1.0);
    const Point2 v = p - c0_;
    return std::abs(u.x * v.y - u.y * v.x);
}

double StripRsRt::axis_position(Point2 p) const {
    const Point2 u = point_to_point({}, angle_, 1.0);
    const Point2 v = p - c0_;
    return u.x * v.x + u.y * v.y;
}

void StripRsRt::start_resizing(Point2 pt, int node, ShapeKind /*shape*/) {
    const std::size_t m = (cover().size() - 3) / 2;
    const auto i = static_cast<std::size_t>(node);
    if (i < 2) {
        grip_ = Grip::Side;
        const double d = axis_distance(pt);
        grip_ratio_ = d > 1e-9 ? radius_ / d : 0.0;
    } else if (i < 2 + m) {
        grip_ = Grip::CapStart;
        // Axial offset of the pointer beyond c0 (positive outward); kept during the drag.
        grip_offset_ = -axis_position(pt);
    } else if (i < 2 + 2 * m) {
        grip_ = Grip::CapEnd;
        grip_offset_ = axis_position(pt) - length();
    } else {
        grip_ = Grip::None;
    }
}

void StripRsRt::start_rotation(Point2 pt) {
    rot_length_ = length();
    rotation_.start(center(), angle_, pt);
}

bool StripRsRt::move_node(int /*node*/, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) {
        if (const auto a = rotation_.step(pt)) {
            angle_ = limited_radian(*a);
            const Point2 mid = rotation_.center();
            c0_ = point_to_point(mid, angle_ + Angle{kPi}, rot_length_ / 2);
            c1_ = point_to_point(c0_, angle_, rot_length_);
            define_cover();
        }
        return true;
    }
    switch (grip_) {
        case Grip::None:
            move_by(dx, dy);
            return true;
        case Grip::Side:
            if (grip_ratio_ > 0.0) radius_ = std::max(kMinSize, grip_ratio_ * axis_distance(pt));
            break;
        case Grip::CapStart: {
            // c1 stays; measure the pointer back from c1 so the moving c0 is not the origin.
            const double from_end = length() - axis_position(pt);
            const double len = std::max(kMinSize, from_end - grip_offset_);
            c0_ = point_to_point(c1_, angle_ + Angle{kPi}, len);
            break;
        }
        case Grip::CapEnd: {
            const double len = std::max(kMinSize, axis_position(pt) - grip_offset_);
            c1_ = point_to_point(c0_, angle_, len);
            break;
        }
    }
    defer_rebuild();
    return true;
}

Rect StripRsRt::bounds() const {
    return Rect::from_corners(c0_, c1_).inflated(radius_);
}

void StripRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(c0_).point(c1_).real(radius_);
}

// ---------------------------------------------------------------- CircleInsidePolyRsRt

CircleInsidePolyRsRt::CircleInsidePolyRsRt(Point2 center, double poly_radius, int n_apexes, Point2 hole_center,
                                           double hole_radius, Angle angle)
    : center_(center), poly_radius_(poly_radius), n_(n_apexes), angle_(limited_radian(angle)), hole_radius_(hole_radius) {
    if (n_apexes < 3 || poly_radius < kMinSize || hole_radius < kMinSize) {
        throw Error(ErrorCode::InvalidArgument, "circle-in-polygon needs n >= 3 and radii >= 10");
    }
    hole_dist_ = distance(center, hole_center);
    hole_dir_ = hole_dist_ > 0.0 ? line_angle(center, hole_center) - angle : Angle{};
    if (hole_dist_ + hole_radius + kMinRingGap > inradius()) {
        throw Error(ErrorCode::InvalidHole, "hole must stay 8 px inside the polygon");
    }
    define_cover();
}

double CircleInsidePolyRsRt::inradius() const {
    return poly_radius_ * std::cos(kPi / n_);
}

Point2 CircleInsidePolyRsRt::hole_center() const {
    return point_to_point(center_, angle_ + hole_dir_, hole_dist_);
}

std::vector<Point2> CircleInsidePolyRsRt::apexes() const {
    std::vector<Point2> out;
    for (int i = 0; i < n_; ++i) out.push_back(point_to_point(center_, angle_ + Angle{2 * kPi * i / n_}, poly_radius_));
    return out;
}

std::size_t CircleInsidePolyRsRt::expected_node_count() const {
    return nnode_border_count(hole_radius_) + static_cast<std::size_t>(n_) + 2;
}

void CircleInsidePolyRsRt::define_cover() {
    const Point2 hc = hole_center();
    const auto pts = apexes();
    auto nodes = nnode_border(hc, hole_radius_);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        nodes.push_back(strip_node(pts[i], pts[(i + 1) % pts.size()], kSmallNodeRadius));
    }
    nodes.push_back(circle_node(hc, hole_radius_, MovementFreedom::Transparent, CursorHint::Default));
    nodes.push_back(polygon_node(pts));
    set_cover(Cover(std::move(nodes)));
}

void CircleInsidePolyRsRt::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    define_cover();
}

void CircleInsidePolyRsRt::start_resizing(Point2 pt, int node, ShapeKind /*shape*/) {
    const std::size_t border = cover().size() - static_cast<std::size_t>(n_) - 2;
    if (static_cast<std::size_t>(node) < border) {
        scale_.start(hole_radius_, hole_center(), pt);
    } else {
        scale_.start(poly_radius_, center_, pt);
    }
}

void CircleInsidePolyRsRt::start_rotation(Point2 pt) {
    rotation_.start(center_, angle_, pt);
}

bool CircleInsidePolyRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) {
        if (const auto a = rotation_.step(pt)) {
            angle_ = limited_radian(*a);
            define_cover();
        }
        return true;
    }
    const std::size_t border = cover().size() - static_cast<std::size_t>(n_) - 2;
    const auto i = static_cast<std::size_t>(node);
    if (i < border) {
        const double room = inradius() - hole_dist_ - kMinRingGap;
        hole_radius_ = std::clamp(scale_.value_at(hole_center(), pt), kMinSize, std::max(kMinSize, room));
        defer_rebuild();
        return true;
    }
    if (i < border + static_cast<std::size_t>(n_)) {
        // Outer strips keep their count, so the cover can follow immediately.
        const double floor_r = (hole_dist_ + hole_radius_ + kMinRingGap) / std::cos(kPi / n_);
        poly_radius_ = std::max({kMinSize, floor_r, scale_.value_at(center_, pt)});
        define_cover();
        return true;
    }
    move_by(dx, dy);
    return true;
}

Rect CircleInsidePolyRsRt::bounds() const {
    const auto pts = apexes();
    Rect r{pts[0].x, pts[0].y, 0, 0};
    for (const Point2 p : pts) {
        r = Rect::from_corners({std::min(r.left, p.x), std::min(r.top, p.y)},
                               {std::max(r.right(), p.x), std::max(r.bottom(), p.y)});
    }
    return r;
}

void CircleInsidePolyRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_).point(hole_center()).real(hole_radius_);
    for (const Point2 p : apexes()) out.point(p);
}

}  // namespace coverkit
