#include "coverkit/moveable.hpp"

#include <atomic>

#include "coverkit/mover.hpp"

namespace coverkit {

namespace {
std::atomic<std::uint64_t> g_last_id{0};
}  // namespace

ObjectId next_unique_id() {
    return ObjectId{g_last_id.fetch_add(1, std::memory_order_relaxed) + 1};
}

const char* to_string(MouseButton button) {
    return button == MouseButton::Left ? "left" : "right";
}

MoveableObject::MoveableObject() : id_(next_unique_id()) {}

void MoveableObject::into_mover(Mover& mover, std::size_t index) {
    mover.insert(index, *this);
}

}  // namespace coverkit
