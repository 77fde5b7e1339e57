#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/geometry.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

/// How far the pointer may carry an object outside the clip bounds.
///   Visual: pointer clamped into the bounds on both axes.
///   Safe:   pointer clamped at the left and top edges only.
///   Unsafe: never clamped.
enum class Clipping { Visual, Safe, Unsafe };

const char* to_string(Clipping clipping);

struct CaughtState {
    std::size_t index = 0;
    int node = 0;
    MovementFreedom freedom = MovementFreedom::All;
    MouseButton button = MouseButton::Left;
};

struct HitReport {
    std::size_t index = 0;
    ObjectId id;
    int node = 0;
    ShapeKind shape = ShapeKind::Polygon;
    CursorHint cursor = CursorHint::Default;
};

struct ReleaseResult {
    bool released = false;
    std::optional<std::size_t> was_caught;
};

struct CoverGeometryEntry {
    ObjectId object;
    CoverNode node;
};

/// Supervises catch / move / release for an ordered queue of objects.
///
/// The queue head is the topmost object: catch scans head to tail and the
/// first object whose cover decides wins. The mover does not own objects.
class Mover {
public:
    Mover() = default;
    explicit Mover(Rect clip_bounds) : clip_bounds_(clip_bounds) {}

    void add(MoveableObject& obj);
    void insert(std::size_t index, MoveableObject& obj);
    void clear();
    /// Reverses the sub-range [start, start + count).
    void reorder_reverse(std::size_t start, std::size_t count);

    std::size_t size() const { return queue_.size(); }
    bool empty() const { return queue_.empty(); }
    MoveableObject& operator[](std::size_t i) const { return *queue_.at(i); }
    std::optional<std::size_t> index_of(ObjectId id) const;
    bool contains(ObjectId id) const { return index_of(id).has_value(); }

    bool catch_at(Point2 pt, MouseButton button);
    /// Returns true when a caught object was processed (redraw needed).
    bool move(Point2 pt);
    ReleaseResult release();
    std::optional<HitReport> sense(Point2 pt) const;
    std::vector<CoverGeometryEntry> cover_geometry() const;

    void set_clip_bounds(std::optional<Rect> bounds) { clip_bounds_ = bounds; }
    std::optional<Rect> clip_bounds() const { return clip_bounds_; }
    void set_clipping(Clipping level) { clipping_ = level; }
    Clipping clipping() const { return clipping_; }

    /// Pointer position after applying the current clipping level.
    Point2 clip(Point2 pt) const;

    const std::optional<CaughtState>& caught() const { return caught_; }
    MoveableObject* caught_object() const { return caught_ ? queue_[caught_->index] : nullptr; }
    std::optional<std::size_t> was_caught() const { return was_caught_; }
    const std::optional<HitReport>& sensed() const { return sensed_; }
    Point2 prev_point() const { return prev_point_; }

private:
    struct ScanResult {
        std::size_t index;
        HitOutcome outcome;
    };
    std::optional<ScanResult> scan(Point2 pt) const;

    std::vector<MoveableObject*> queue_;
    std::optional<Rect> clip_bounds_;
    Clipping clipping_ = Clipping::Visual;
    std::optional<CaughtState> caught_;
    std::optional<std::size_t> was_caught_;
    std::optional<HitReport> sensed_;
    Point2 prev_point_;
};

}  // namespace coverkit
