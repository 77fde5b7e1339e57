#include "coverkit/scene.hpp"

#include <algorithm>
#include <array>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {

constexpr std::array kRoleOrder{ObjectRole::Control,   ObjectRole::ControlGroup, ObjectRole::Selection,
                                ObjectRole::Info,      ObjectRole::Composite,    ObjectRole::Figure};

bool is_graphic(ObjectRole role) {
    return role == ObjectRole::Figure || role == ObjectRole::Composite;
}

}  // namespace

MoveableObject& Scene::add(std::string name, std::unique_ptr<MoveableObject> obj) {
    if (mover_.caught()) {
        throw Error(ErrorCode::SequenceError, "cannot add objects while one is caught");
    }
    MoveableObject& ref = *obj;
    name_object(std::move(name), ref);
    owned_.push_back(std::move(obj));
    if (is_graphic(ref.role())) {
        order_.insert(order_.begin(), &ref);
    } else {
        order_.push_back(&ref);
    }
    renew_mover();
    return ref;
}

void Scene::name_object(std::string name, MoveableObject& obj) {
    if (by_name_.contains(name)) {
        throw Error(ErrorCode::DuplicateObject, "name '" + name + "' already used");
    }
    names_[obj.id()] = name;
    by_name_.emplace(std::move(name), &obj);
}

MoveableObject* Scene::find(std::string_view name) const {
    const auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : it->second;
}

MoveableObject& Scene::get(std::string_view name) const {
    if (MoveableObject* obj = find(name)) return *obj;
    throw Error(ErrorCode::UnknownObject, "unknown object '" + std::string(name) + "'");
}

std::string Scene::name_of(ObjectId id) const {
    if (selection_ && selection_->id() == id) return "selection";
    const auto it = names_.find(id);
    return it == names_.end() ? "#" + std::to_string(id.value) : it->second;
}

void Scene::renew_mover() {
    mover_.clear();
    for (const ObjectRole role : kRoleOrder) {
        if (role == ObjectRole::Selection) {
            if (selection_) selection_->into_mover(mover_, mover_.size());
            continue;
        }
        for (MoveableObject* obj : order_) {
            if (obj->role() == role && is_top_level(*obj)) obj->into_mover(mover_, mover_.size());
        }
    }
}

std::vector<MoveableObject*> Scene::enclosed_by(const Rect& rc) const {
    std::vector<MoveableObject*> out;
    for (MoveableObject* obj : order_) {
        if (!is_top_level(*obj)) continue;
        const ObjectRole role = obj->role();
        const bool control = role == ObjectRole::Control || role == ObjectRole::ControlGroup;
        if (control && !selection_includes_controls_) continue;
        if (rc.contains(obj->bounds())) out.push_back(obj);
    }
    return out;
}

SimpleFrame* Scene::rubber_band_select(Point2 a, Point2 b) {
    if (mover_.caught()) {
        throw Error(ErrorCode::SequenceError, "cannot select while an object is caught");
    }
    selection_.reset();
    auto frame = std::make_unique<SimpleFrame>(Rect::from_corners(a, b),
                                               [this](const Rect& rc) { return enclosed_by(rc); });
    if (frame->enclosed().size() >= 2) selection_ = std::move(frame);
    renew_mover();
    return selection_.get();
}

void Scene::drop_selection() {
    if (!selection_) return;
    if (mover_.caught()) {
        throw Error(ErrorCode::SequenceError, "cannot drop the selection while an object is caught");
    }
    selection_.reset();
    renew_mover();
}

ReleaseResult Scene::release() {
    const ReleaseResult r = mover_.release();
    if (selection_ && selection_->enclosed().size() < 2) {
        selection_.reset();
        renew_mover();
    }
    return r;
}

std::size_t Scene::bring_to_top(std::size_t index) {
    if (index >= mover_.size()) {
        throw Error(ErrorCode::OutOfRange, "queue index " + std::to_string(index) + " out of range");
    }
    std::size_t cur = index;
    while (cur > 0 && mover_[cur - 1].role() == ObjectRole::Figure) {
        mover_.reorder_reverse(cur - 1, 2);
        --cur;
    }
    sync_order_from_queue();
    return cur;
}

void Scene::sync_order_from_queue() {
    const auto pos = [this](const MoveableObject* obj) { return mover_.index_of(obj->id()).value_or(mover_.size()); };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](const MoveableObject* a, const MoveableObject* b) { return pos(a) < pos(b); });
}

}  // namespace coverkit
