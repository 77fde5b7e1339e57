#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/geometry.hpp"

namespace coverkit {

class Mover;

struct ObjectId {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

/// Process-wide, strictly increasing, starts at 1. Thread-safe.
ObjectId next_unique_id();

enum class MouseButton { Left, Right };

/// Token stream describing an object's geometry for dumps and clients.
class GeometryWriter {
public:
    using Token = std::variant<std::string, double>;

    GeometryWriter& word(std::string_view w) {
        tokens_.emplace_back(std::string(w));
        return *this;
    }
    GeometryWriter& real(double v) {
        tokens_.emplace_back(v);
        return *this;
    }
    GeometryWriter& point(Point2 p) { return real(p.x).real(p.y); }

    const std::vector<Token>& tokens() const { return tokens_; }

private:
    std::vector<Token> tokens_;
};

const char* to_string(MouseButton button);

/// Where an object belongs when a scene rebuilds its mover queue. Controls
/// always precede graphics; declaration order is queue order.
enum class ObjectRole {
    Control,       // widget proxies and control groups
    ControlGroup,  // control groups with individually moveable children
    Selection,     // temporary rubber-band frame
    Info,          // labels
    Composite,     // graphics with individually moveable children
    Figure,
};

/// Contract for everything the mover can catch.
///
/// Subclasses build their cover in define_cover(), translate themselves in
/// move_by() and translate pointer drags into geometry changes in move_node().
class MoveableObject {
public:
    MoveableObject();
    virtual ~MoveableObject() = default;

    MoveableObject(const MoveableObject&) = delete;
    MoveableObject& operator=(const MoveableObject&) = delete;

    ObjectId id() const { return id_; }
    std::optional<ObjectId> parent_id() const { return parent_id_; }
    void set_parent_id(std::optional<ObjectId> parent) { parent_id_ = parent; }

    const Cover& cover() const { return cover_; }

    virtual void define_cover() = 0;
    virtual void move_by(double dx, double dy) = 0;

    /// Drag of node `node` by (dx, dy); `pt` is the (clipped) pointer.
    /// Returns false when the object refused the movement.
    virtual bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) = 0;

    virtual void start_resizing(Point2 /*pt*/, int /*node*/, ShapeKind /*shape*/) {}
    virtual void start_rotation(Point2 /*pt*/) {}
    virtual void on_release() {}

    /// Registers this object (and any individually moveable parts) at `index`.
    virtual void into_mover(Mover& mover, std::size_t index);

    virtual std::string_view kind() const = 0;
    virtual ObjectRole role() const { return ObjectRole::Figure; }
    virtual Rect bounds() const = 0;
    virtual Angle angle() const { return Angle{}; }

    /// Defining points (and radii) for dumps; writes nothing for objects that
    /// are fully described by bounds().
    virtual void describe_geometry(GeometryWriter& /*out*/) const {}

    /// Observers (elastic groups) hear about changes the mover applied.
    void set_change_listener(std::function<void()> listener) { listener_ = std::move(listener); }
    void notify_changed() {
        if (listener_) listener_();
    }

protected:
    void set_cover(Cover cover) { cover_ = std::move(cover); }

private:
    ObjectId id_;
    std::optional<ObjectId> parent_id_;
    Cover cover_;
    std::function<void()> listener_;
};

}  // namespace coverkit
