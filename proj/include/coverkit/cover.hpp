#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "coverkit/geometry.hpp"

namespace coverkit {

struct CircleShape {
    Point2 center;
    double radius = 0.0;

    friend bool operator==(const CircleShape&, const CircleShape&) = default;
};

/// Convex polygon; apex order may be clockwise or counter-clockwise.
struct PolygonShape {
    std::vector<Point2> apexes;

    friend bool operator==(const PolygonShape&, const PolygonShape&) = default;
};

/// Capsule: segment [a, b] thickened by `radius` with semicircular caps.
struct StripShape {
    Point2 a;
    Point2 b;
    double radius = 0.0;

    friend bool operator==(const StripShape&, const StripShape&) = default;
};

using NodeShape = std::variant<CircleShape, PolygonShape, StripShape>;

enum class ShapeKind { Circle, Polygon, Strip };

ShapeKind shape_kind(const NodeShape& shape);

/// How the mover treats a node that contains the pointer.
enum class MovementFreedom {
    None,         ///< blocks the press and everything beneath it
    Freeze,       ///< caught but never moved
    All,
    NS,           ///< only vertical deltas are forwarded
    WE,           ///< only horizontal deltas are forwarded
    Transparent,  ///< skip the rest of this object's cover
};

enum class CursorHint { SizeAll, Hand, SizeNS, SizeWE, Default };

enum class Resizing { None, NS, WE, Any };

const char* to_string(ShapeKind kind);
const char* to_string(MovementFreedom freedom);
const char* to_string(CursorHint cursor);
const char* to_string(Resizing resizing);

struct CoverNode {
    int id = 0;
    NodeShape shape;
    MovementFreedom freedom = MovementFreedom::All;
    CursorHint cursor = CursorHint::Hand;
    bool visible = false;  // render hint only, never consulted by hit-testing
};

// Node factories. Default cursors: polygons SizeAll, circles and strips Hand.
CoverNode circle_node(Point2 center, double radius,
                      MovementFreedom freedom = MovementFreedom::All,
                      CursorHint cursor = CursorHint::Hand);
CoverNode polygon_node(std::vector<Point2> apexes,
                       MovementFreedom freedom = MovementFreedom::All,
                       CursorHint cursor = CursorHint::SizeAll);
CoverNode rect_node(const Rect& rc,
                    MovementFreedom freedom = MovementFreedom::All,
                    CursorHint cursor = CursorHint::SizeAll);
CoverNode strip_node(Point2 a, Point2 b, double radius,
                     MovementFreedom freedom = MovementFreedom::All,
                     CursorHint cursor = CursorHint::Hand);

/// Ordered set of nodes; earlier nodes win where nodes overlap.
///
/// The constructor renumbers node ids to match their index and validates
/// every shape (positive radii, convex polygons). A default-constructed
/// cover is empty and only exists until an object's first define_cover().
class Cover {
public:
    Cover() = default;
    explicit Cover(std::vector<CoverNode> nodes);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const CoverNode& operator[](std::size_t i) const { return nodes_[i]; }
    std::span<const CoverNode> nodes() const { return nodes_; }
    auto begin() const { return nodes_.begin(); }
    auto end() const { return nodes_.end(); }

private:
    std::vector<CoverNode> nodes_;
};

bool node_contains(const CoverNode& node, Point2 p);

struct HitOutcome {
    enum class Kind { Miss, Caught, TransparentFallthrough, Blocked };
    Kind kind = Kind::Miss;
    int node = -1;  // deciding node for everything except Miss

    friend bool operator==(const HitOutcome&, const HitOutcome&) = default;
};

/// Scans the nodes in order; the first node containing `p` decides.
HitOutcome cover_hit(const Cover& cover, Point2 p);

inline constexpr double kDefaultCornerRadius = 5.0;
inline constexpr double kDefaultHalfStrip = 3.0;

/// Standard rectangle cover.
///   None: [area]
///   NS:   [top strip, bottom strip, area]
///   WE:   [left strip, right strip, area]
///   Any:  [4 corner circles TL TR BR BL, strips top right bottom left, area]
/// Edge strips have the visual border as their median.
Cover standard_rect_cover(const Rect& rc, Resizing resize,
                          double corner_radius = kDefaultCornerRadius,
                          double half_strip = kDefaultHalfStrip);

}  // namespace coverkit
