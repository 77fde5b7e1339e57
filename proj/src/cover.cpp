#include "coverkit/cover.hpp"

#include <algorithm>
#include <string>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool polygon_contains(const std::vector<Point2>& apexes, Point2 p) {
    const std::size_t n = apexes.size();
    bool has_pos = false;
    bool has_neg = false;
    double max_edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = apexes[i];
        const Point2 b = apexes[(i + 1) % n];
        const double edge = distance(a, b);
        max_edge = std::max(max_edge, edge);
        // Signed distance of p from the edge line; boundary counts as inside.
        const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        const double tol = 1e-9 * (edge > 0 ? edge : 1.0);
        if (cross > tol) has_pos = true;
        if (cross < -tol) has_neg = true;
        if (has_pos && has_neg) return false;
    }
    if (!has_pos && !has_neg) {
        // Zero-area polygon: p lies on the carrier line; accept only on the outline.
        for (std::size_t i = 0; i < n; ++i) {
            if (point_segment_distance(p, apexes[i], apexes[(i + 1) % n]) <= 1e-9 * std::max(1.0, max_edge)) {
                return true;
            }
        }
        return false;
    }
    return true;
}

void validate(const CoverNode& node) {
    std::visit(Overloaded{
                   [](const CircleShape& c) {
                       if (!(c.radius > 0.0)) {
                           throw Error(ErrorCode::InvalidCover, "circle node radius must be positive");
                       }
                   },
                   [](const StripShape& s) {
                       if (!(s.radius > 0.0)) {
                           throw Error(ErrorCode::InvalidCover, "strip node radius must be positive");
                       }
                   },
                   [](const PolygonShape& poly) {
                       if (poly.apexes.size() < 3 || !is_convex(poly.apexes)) {
                           throw Error(ErrorCode::InvalidCover, "polygon node must be convex");
                       }
                   },
               },
               node.shape);
}

}  // namespace

ShapeKind shape_kind(const NodeShape& shape) {
    return std::visit(Overloaded{
                          [](const CircleShape&) { return ShapeKind::Circle; },
                          [](const PolygonShape&) { return ShapeKind::Polygon; },
                          [](const StripShape&) { return ShapeKind::Strip; },
                      },
                      shape);
}

const char* to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Circle: return "circle";
        case ShapeKind::Polygon: return "polygon";
        case ShapeKind::Strip: return "strip";
    }
    return "?";
}

const char* to_string(MovementFreedom freedom) {
    switch (freedom) {
        case MovementFreedom::None: return "None";
        case MovementFreedom::Freeze: return "Freeze";
        case MovementFreedom::All: return "All";
        case MovementFreedom::NS: return "NS";
        case MovementFreedom::WE: return "WE";
        case MovementFreedom::Transparent: return "Transparent";
    }
    return "?";
}

const char* to_string(CursorHint cursor) {
    switch (cursor) {
        case CursorHint::SizeAll: return "SizeAll";
        case CursorHint::Hand: return "Hand";
        case CursorHint::SizeNS: return "SizeNS";
        case CursorHint::SizeWE: return "SizeWE";
        case CursorHint::Default: return "Default";
    }
    return "?";
}

const char* to_string(Resizing resizing) {
    switch (resizing) {
        case Resizing::None: return "none";
        case Resizing::NS: return "ns";
        case Resizing::WE: return "we";
        case Resizing::Any: return "any";
    }
    return "?";
}

CoverNode circle_node(Point2 center, double radius, MovementFreedom freedom, CursorHint cursor) {
    return CoverNode{0, CircleShape{center, radius}, freedom, cursor};
}

CoverNode polygon_node(std::vector<Point2> apexes, MovementFreedom freedom, CursorHint cursor) {
    return CoverNode{0, PolygonShape{std::move(apexes)}, freedom, cursor};
}

CoverNode rect_node(const Rect& rc, MovementFreedom freedom, CursorHint cursor) {
    return polygon_node({rc.top_left(), rc.top_right(), rc.bottom_right(), rc.bottom_left()}, freedom, cursor);
}

CoverNode strip_node(Point2 a, Point2 b, double radius, MovementFreedom freedom, CursorHint cursor) {
    return CoverNode{0, StripShape{a, b, radius}, freedom, cursor};
}

Cover::Cover(std::vector<CoverNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) {
        throw Error(ErrorCode::InvalidCover, "cover needs at least one node");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        nodes_[i].id = static_cast<int>(i);
        validate(nodes_[i]);
    }
}

bool node_contains(const CoverNode& node, Point2 p) {
    return std::visit(Overloaded{
                          [p](const CircleShape& c) { return distance(c.center, p) <= c.radius; },
                          [p](const StripShape& s) { return point_segment_distance(p, s.a, s.b) <= s.radius; },
                          [p](const PolygonShape& poly) { return polygon_contains(poly.apexes, p); },
                      },
                      node.shape);
}

HitOutcome cover_hit(const Cover& cover, Point2 p) {
    for (const CoverNode& node : cover) {
        if (!node_contains(node, p)) {
            continue;
        }
        switch (node.freedom) {
            case MovementFreedom::None:
                return {HitOutcome::Kind::Blocked, node.id};
            case MovementFreedom::Transparent:
                return {HitOutcome::Kind::TransparentFallthrough, node.id};
            default:
                return {HitOutcome::Kind::Caught, node.id};
        }
    }
    return {};
}

Cover standard_rect_cover(const Rect& rc, Resizing resize, double corner_radius, double half_strip) {
    if (!(rc.width > 0.0) || !(rc.height > 0.0) || !(corner_radius > 0.0) || !(half_strip > 0.0)) {
        throw Error(ErrorCode::InvalidCover, "standard_rect_cover: degenerate rectangle or node size");
    }
    const Point2 tl = rc.top_left();
    const Point2 tr = rc.top_right();
    const Point2 br = rc.bottom_right();
    const Point2 bl = rc.bottom_left();
    const auto top = [&] { return strip_node(tl, tr, half_strip, MovementFreedom::NS, CursorHint::SizeNS); };
    const auto bottom = [&] { return strip_node(bl, br, half_strip, MovementFreedom::NS, CursorHint::SizeNS); };
    const auto left = [&] { return strip_node(tl, bl, half_strip, MovementFreedom::WE, CursorHint::SizeWE); };
    const auto right = [&] { return strip_node(tr, br, half_strip, MovementFreedom::WE, CursorHint::SizeWE); };

    std::vector<CoverNode> nodes;
    switch (resize) {
        case Resizing::None:
            break;
        case Resizing::NS:
            nodes = {top(), bottom()};
            break;
        case Resizing::WE:
            nodes = {left(), right()};
            break;
        case Resizing::Any:
            nodes = {
                circle_node(tl, corner_radius), circle_node(tr, corner_radius),
                circle_node(br, corner_radius), circle_node(bl, corner_radius),
                top(), right(), bottom(), left(),
            };
            break;
    }
    nodes.push_back(rect_node(rc));
    return Cover(std::move(nodes));
}

}  // namespace coverkit
