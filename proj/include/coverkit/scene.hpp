#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverkit/groups.hpp"
#include "coverkit/moveable.hpp"
#include "coverkit/mover.hpp"

namespace coverkit {

/// Owns the objects of one interactive surface and keeps the mover queue
/// consistent with them.
///
/// Queue layout after renew_mover(): roles in ObjectRole order (controls
/// first), composites and groups registered through into_mover(). Within the
/// figure block the newest figure comes first. Objects with a parent are
/// registered by their parent only.
class Scene {
public:
    Scene() = default;
    Scene(const Scene&) = delete;
    Scene& operator=(const Scene&) = delete;

    Mover& mover() { return mover_; }
    const Mover& mover() const { return mover_; }

    /// Takes ownership, names the object and rebuilds the queue.
    /// Throws DuplicateObject for a taken name, SequenceError while something is caught.
    MoveableObject& add(std::string name, std::unique_ptr<MoveableObject> obj);

    template <class T, class... Args>
    T& emplace(std::string name, Args&&... args) {
        return static_cast<T&>(add(std::move(name), std::make_unique<T>(std::forward<Args>(args)...)));
    }

    /// Names an object owned elsewhere (comments owned by their rectangle).
    void name_object(std::string name, MoveableObject& obj);

    MoveableObject* find(std::string_view name) const;
    /// Throws UnknownObject.
    MoveableObject& get(std::string_view name) const;
    std::string name_of(ObjectId id) const;

    /// Clears the queue and re-registers every top-level object.
    void renew_mover();

    /// Top-level objects whose bounds lie fully inside `rc`, excluding the selection.
    std::vector<MoveableObject*> enclosed_by(const Rect& rc) const;

    /// Replaces any selection with a frame around the objects inside the
    /// rectangle spanned by a and b; none when fewer than two are enclosed.
    SimpleFrame* rubber_band_select(Point2 a, Point2 b);
    SimpleFrame* selection() const { return selection_.get(); }
    void drop_selection();
    void set_selection_includes_controls(bool on) { selection_includes_controls_ = on; }

    /// Mover release plus selection upkeep: a frame enclosing fewer than two
    /// objects disappears.
    ReleaseResult release();

    /// Moves the object at queue index `index` to the head of its run of
    /// figures by pairwise reverses. Returns the final index.
    std::size_t bring_to_top(std::size_t index);

private:
    bool is_top_level(const MoveableObject& obj) const { return !obj.parent_id().has_value(); }
    void sync_order_from_queue();

    Mover mover_;
    std::vector<std::unique_ptr<MoveableObject>> owned_;
    std::vector<MoveableObject*> order_;  // top-level objects, display order within each role
    std::map<std::string, MoveableObject*, std::less<>> by_name_;
    std::map<ObjectId, std::string> names_;
    std::unique_ptr<SimpleFrame> selection_;
    bool selection_includes_controls_ = false;
};

}  // namespace coverkit
