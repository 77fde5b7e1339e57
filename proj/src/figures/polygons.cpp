#include "coverkit/figures/polygons.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

Rect bounding(const std::vector<Point2>& pts) {
    double l = std::numeric_limits<double>::infinity();
    double t = l;
    double r = -l;
    double b = -l;
    for (const Point2 p : pts) {
        l = std::min(l, p.x);
        t = std::min(t, p.y);
        r = std::max(r, p.x);
        b = std::max(b, p.y);
    }
    return Rect{l, t, r - l, b - t};
}

void append_side_strips(std::vector<CoverNode>& nodes, const std::vector<Point2>& apexes) {
    const std::size_t n = apexes.size();
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back(strip_node(apexes[i], apexes[(i + 1) % n], kSmallNodeRadius));
    }
}

Point2 rotate_about(Point2 offset, double radians) {
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    return {offset.x * c - offset.y * s, offset.x * s + offset.y * c};
}

}  // namespace

std::vector<Point2> regular_apexes(Point2 center, double radius, int n, Angle angle) {
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(point_to_point(center, angle + Angle{2 * kPi * i / n}, radius));
    }
    return out;
}

// ---------------------------------------------------------------- RegularPolygonRsRt

RegularPolygonRsRt::RegularPolygonRsRt(Point2 center, double radius, int n_apexes, Angle angle,
                                       bool resizable, bool rotatable)
    : center_(center), radius_(radius), n_(n_apexes), angle_(limited_radian(angle)), resizable_(resizable), rotatable_(rotatable) {
    if (n_apexes < 3 || radius < kMinSize) {
        throw Error(ErrorCode::InvalidArgument, "regular polygon needs n >= 3 and radius >= 10");
    }
    define_cover();
}

void RegularPolygonRsRt::define_cover() {
    const auto pts = apexes();
    std::vector<CoverNode> nodes;
    if (resizable_) append_side_strips(nodes, pts);
    nodes.push_back(polygon_node(pts));
    set_cover(Cover(std::move(nodes)));
}

void RegularPolygonRsRt::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    define_cover();
}

void RegularPolygonRsRt::start_resizing(Point2 pt, int /*node*/, ShapeKind /*shape*/) {
    scale_.start(radius_, center_, pt);
}

void RegularPolygonRsRt::start_rotation(Point2 pt) {
    rotation_.start(center_, angle_, pt);
}

bool RegularPolygonRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) {
        if (!rotatable_) return false;
        if (const auto a = rotation_.step(pt)) {
            angle_ = limited_radian(*a);
            define_cover();
        }
        return true;
    }
    if (resizable_ && node < n_) {
        radius_ = std::max(kMinSize, scale_.value_at(center_, pt));
        define_cover();
        return true;
    }
    move_by(dx, dy);
    return true;
}

Rect RegularPolygonRsRt::bounds() const {
    return bounding(apexes());
}

void RegularPolygonRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_);
    for (const Point2 p : apexes()) out.point(p);
}

// ---------------------------------------------------------------- PerforatedPolygonRsRt

PerforatedPolygonRsRt::PerforatedPolygonRsRt(Point2 center, double r_inner, double r_outer, int n_apexes,
                                             Angle angle, bool rotatable)
    : center_(center), r_inner_(r_inner), r_outer_(r_outer), n_(n_apexes), angle_(limited_radian(angle)), rotatable_(rotatable) {
    if (n_apexes < 3 || r_inner < kMinSize || r_inner > r_outer - kMinRingGap) {
        throw Error(ErrorCode::InvalidArgument,
                    "perforated polygon needs n >= 3, r_inner >= 10 and r_inner <= r_outer - 8");
    }
    define_cover();
}

void PerforatedPolygonRsRt::define_cover() {
    const auto outer = outer_apexes();
    const auto inner = inner_apexes();
    const auto n = static_cast<std::size_t>(n_);
    std::vector<CoverNode> nodes;
    nodes.reserve(3 * n);
    append_side_strips(nodes, outer);
    append_side_strips(nodes, inner);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        nodes.push_back(polygon_node({inner[i], outer[i], outer[j], inner[j]}));
    }
    set_cover(Cover(std::move(nodes)));
}

void PerforatedPolygonRsRt::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    define_cover();
}

void PerforatedPolygonRsRt::start_resizing(Point2 pt, int node, ShapeKind /*shape*/) {
    scale_.start(node < n_ ? r_outer_ : r_inner_, center_, pt);
}

void PerforatedPolygonRsRt::start_rotation(Point2 pt) {
    rotation_.start(center_, angle_, pt);
}

bool PerforatedPolygonRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Right) {
        if (!rotatable_) return false;
        if (const auto a = rotation_.step(pt)) {
            angle_ = limited_radian(*a);
            define_cover();
        }
        return true;
    }
    if (node < n_) {
        r_outer_ = std::max({kMinSize, r_inner_ + kMinRingGap, scale_.value_at(center_, pt)});
    } else if (node < 2 * n_) {
        r_inner_ = std::clamp(scale_.value_at(center_, pt), kMinSize, r_outer_ - kMinRingGap);
    } else {
        move_by(dx, dy);
        return true;
    }
    define_cover();
    return true;
}

Rect PerforatedPolygonRsRt::bounds() const {
    return bounding(outer_apexes());
}

void PerforatedPolygonRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_);
    for (const Point2 p : outer_apexes()) out.point(p);
    for (const Point2 p : inner_apexes()) out.point(p);
}

// ---------------------------------------------------------------- ChatoyantPolygonRsRt

ChatoyantPolygonRsRt::ChatoyantPolygonRsRt(Point2 center, std::vector<Point2> apexes, Angle angle, bool rotatable)
    : center_(center), apexes_(std::move(apexes)), angle_(limited_radian(angle)), rotatable_(rotatable) {
    if (apexes_.size() < 3) {
        throw Error(ErrorCode::InvalidArgument, "chatoyant polygon needs at least 3 apexes");
    }
    colors_.resize(apexes_.size());
    define_cover();
}

std::unique_ptr<ChatoyantPolygonRsRt> ChatoyantPolygonRsRt::regular(Point2 center, double radius, int n, Angle angle) {
    if (n < 3 || radius < kMinSize) {
        throw Error(ErrorCode::InvalidArgument, "chatoyant polygon needs n >= 3 and radius >= 10");
    }
    return std::make_unique<ChatoyantPolygonRsRt>(center, regular_apexes(center, radius, n, angle), angle);
}

void ChatoyantPolygonRsRt::define_cover() {
    const std::size_t n = apexes_.size();
    std::vector<CoverNode> nodes;
    nodes.reserve(3 * n + 1);
    for (const Point2 p : apexes_) nodes.push_back(circle_node(p, kSmallNodeRadius));
    nodes.push_back(circle_node(center_, kSmallNodeRadius));
    append_side_strips(nodes, apexes_);
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back(polygon_node({center_, apexes_[i], apexes_[(i + 1) % n]}));
    }
    set_cover(Cover(std::move(nodes)));
}

void ChatoyantPolygonRsRt::move_by(double dx, double dy) {
    const Point2 d{dx, dy};
    center_ = center_ + d;
    for (Point2& p : apexes_) p = p + d;
    define_cover();
}

void ChatoyantPolygonRsRt::start_resizing(Point2 pt, int /*node*/, ShapeKind /*shape*/) {
    offsets_.clear();
    double min_d = std::numeric_limits<double>::infinity();
    for (const Point2 p : apexes_) {
        offsets_.push_back(p - center_);
        min_d = std::min(min_d, distance(center_, p));
    }
    press_dist_ = distance(center_, pt);
    // Shrinking stops once the closest apex reaches the size floor; apexes
    // that already sit closer are never forced outward.
    min_factor_ = min_d > 0.0 ? std::min(1.0, kMinSize / min_d) : 1.0;
}

void ChatoyantPolygonRsRt::start_rotation(Point2 pt) {
    offsets_.clear();
    for (const Point2 p : apexes_) offsets_.push_back(p - center_);
    angle0_ = angle_;
    rotation_.start(center_, angle_, pt);
}

bool ChatoyantPolygonRsRt::move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) {
    const int n = static_cast<int>(apexes_.size());
    if (catcher == MouseButton::Right) {
        if (!rotatable_) return false;
        if (const auto a = rotation_.step(pt)) {
            angle_ = limited_radian(*a);
            const double turn = (angle_ - angle0_).radians;
            for (std::size_t i = 0; i < apexes_.size(); ++i) {
                apexes_[i] = center_ + rotate_about(offsets_[i], turn);
            }
            define_cover();
        }
        return true;
    }
    if (node < n) {
        Point2& p = apexes_[static_cast<std::size_t>(node)];
        p = p + Point2{dx, dy};
    } else if (node == n) {
        center_ = center_ + Point2{dx, dy};
    } else if (node <= 2 * n) {
        if (press_dist_ <= 1e-9) return false;
        const double factor = std::max(min_factor_, distance(center_, pt) / press_dist_);
        for (std::size_t i = 0; i < apexes_.size(); ++i) apexes_[i] = center_ + offsets_[i] * factor;
    } else {
        move_by(dx, dy);
        return true;
    }
    define_cover();
    return true;
}

Rect ChatoyantPolygonRsRt::bounds() const {
    std::vector<Point2> pts = apexes_;
    pts.push_back(center_);
    return bounding(pts);
}

void ChatoyantPolygonRsRt::describe_geometry(GeometryWriter& out) const {
    out.point(center_);
    for (const Point2 p : apexes_) out.point(p);
}

}  // namespace coverkit
