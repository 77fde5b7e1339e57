#include "coverkit/mover.hpp"

#include <algorithm>
#include <string>

#include "coverkit/error.hpp"

namespace coverkit {

const char* to_string(Clipping clipping) {
    switch (clipping) {
        case Clipping::Visual: return "visual";
        case Clipping::Safe: return "safe";
        case Clipping::Unsafe: return "unsafe";
    }
    return "?";
}

void Mover::add(MoveableObject& obj) {
    insert(queue_.size(), obj);
}

void Mover::insert(std::size_t index, MoveableObject& obj) {
    if (index > queue_.size()) {
        throw Error(ErrorCode::OutOfRange, "mover insert index " + std::to_string(index) + " out of range");
    }
    if (contains(obj.id())) {
        throw Error(ErrorCode::DuplicateObject, "object " + std::to_string(obj.id().value) + " already registered");
    }
    queue_.insert(queue_.begin() + static_cast<std::ptrdiff_t>(index), &obj);
    if (caught_ && caught_->index >= index) {
        ++caught_->index;
    }
}

void Mover::clear() {
    queue_.clear();
    caught_.reset();
    was_caught_.reset();
    sensed_.reset();
}

void Mover::reorder_reverse(std::size_t start, std::size_t count) {
    if (start > queue_.size() || count > queue_.size() - start) {
        throw Error(ErrorCode::OutOfRange, "reorder_reverse range out of queue");
    }
    const auto first = queue_.begin() + static_cast<std::ptrdiff_t>(start);
    std::reverse(first, first + static_cast<std::ptrdiff_t>(count));
    if (caught_ && caught_->index >= start && caught_->index < start + count) {
        caught_->index = start + (start + count - 1 - caught_->index);
    }
}

std::optional<std::size_t> Mover::index_of(ObjectId id) const {
    for (std::size_t i = 0; i < queue_.size(); ++i) {
        if (queue_[i]->id() == id) return i;
    }
    return std::nullopt;
}

std::optional<Mover::ScanResult> Mover::scan(Point2 pt) const {
    for (std::size_t i = 0; i < queue_.size(); ++i) {
        const HitOutcome hit = cover_hit(queue_[i]->cover(), pt);
        switch (hit.kind) {
            case HitOutcome::Kind::Miss:
            case HitOutcome::Kind::TransparentFallthrough:
                continue;
            case HitOutcome::Kind::Blocked:
            case HitOutcome::Kind::Caught:
                return ScanResult{i, hit};
        }
    }
    return std::nullopt;
}

Point2 Mover::clip(Point2 pt) const {
    if (!clip_bounds_) return pt;
    const Rect& b = *clip_bounds_;
    switch (clipping_) {
        case Clipping::Visual:
            // Last pixel inside is right() - 1 / bottom() - 1.
            return {std::clamp(pt.x, b.left, std::max(b.left, b.right() - 1)),
                    std::clamp(pt.y, b.top, std::max(b.top, b.bottom() - 1))};
        case Clipping::Safe:
            return {std::max(pt.x, b.left), std::max(pt.y, b.top)};
        case Clipping::Unsafe:
            break;
    }
    return pt;
}

bool Mover::catch_at(Point2 pt, MouseButton button) {
    if (caught_) {
        return false;
    }
    const auto found = scan(pt);
    if (!found || found->outcome.kind == HitOutcome::Kind::Blocked) {
        return false;
    }
    MoveableObject& obj = *queue_[found->index];
    const CoverNode& node = obj.cover()[static_cast<std::size_t>(found->outcome.node)];
    caught_ = CaughtState{found->index, node.id, node.freedom, button};
    prev_point_ = clip(pt);
    if (button == MouseButton::Left) {
        obj.start_resizing(pt, node.id, shape_kind(node.shape));
    } else {
        obj.start_rotation(pt);
    }
    return true;
}

bool Mover::move(Point2 pt) {
    if (!caught_) {
        sensed_ = sense(pt);
        return false;
    }
    const Point2 p = clip(pt);
    double dx = p.x - prev_point_.x;
    double dy = p.y - prev_point_.y;
    prev_point_ = p;
    switch (caught_->freedom) {
        case MovementFreedom::Freeze:
            return true;
        case MovementFreedom::NS:
            dx = 0.0;
            break;
        case MovementFreedom::WE:
            dy = 0.0;
            break;
        default:
            break;
    }
    MoveableObject& obj = *queue_[caught_->index];
    if (obj.move_node(caught_->node, dx, dy, p, caught_->button)) {
        obj.notify_changed();
    }
    return true;
}

ReleaseResult Mover::release() {
    if (!caught_) {
        return {};
    }
    const std::size_t index = caught_->index;
    caught_.reset();
    was_caught_ = index;
    MoveableObject& obj = *queue_[index];
    obj.on_release();
    obj.notify_changed();
    return {true, index};
}

std::optional<HitReport> Mover::sense(Point2 pt) const {
    const auto found = scan(pt);
    if (!found) return std::nullopt;
    const MoveableObject& obj = *queue_[found->index];
    const CoverNode& node = obj.cover()[static_cast<std::size_t>(found->outcome.node)];
    const CursorHint cursor =
        found->outcome.kind == HitOutcome::Kind::Blocked ? CursorHint::Default : node.cursor;
    return HitReport{found->index, obj.id(), node.id, shape_kind(node.shape), cursor};
}

std::vector<CoverGeometryEntry> Mover::cover_geometry() const {
    std::vector<CoverGeometryEntry> out;
    for (const MoveableObject* obj : queue_) {
        for (const CoverNode& node : obj->cover()) {
            out.push_back({obj->id(), node});
        }
    }
    return out;
}

}  // namespace coverkit
