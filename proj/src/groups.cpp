#include "coverkit/groups.hpp"

#include <algorithm>
#include <array>

#include "coverkit/error.hpp"
#include "coverkit/figures/label.hpp"
#include "coverkit/mover.hpp"

namespace coverkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Rect> bounds_of(const std::vector<MoveableObject*>& objs) {
    std::vector<Rect> out;
    out.reserve(objs.size());
    for (const MoveableObject* o : objs) out.push_back(o->bounds());
    return out;
}

void translate_all(const std::vector<MoveableObject*>& objs, double dx, double dy) {
    for (MoveableObject* o : objs) o->move_by(dx, dy);
}

}  // namespace

// ---------------------------------------------------------------- placement

AxisPlacement axis_placement(double coord, double lo, double hi) {
    if (coord < lo) return EdgeOffset{coord - lo};
    if (coord > hi) return EdgeOffset{coord - hi};
    return Fraction{hi > lo ? (coord - lo) / (hi - lo) : 0.0};
}

double axis_coordinate(const AxisPlacement& placement, double lo, double hi) {
    return std::visit(Overloaded{
                          [&](const Fraction& p) { return lo + p.f * (hi - lo); },
                          [&](const EdgeOffset& p) { return p.d < 0.0 ? lo + p.d : hi + p.d; },
                      },
                      placement);
}

// ---------------------------------------------------------------- Comment

Comment::Comment(const Rect& parent_rect, Point2 center, std::string text, Angle angle)
    : parent_rc_(parent_rect),
      center_(center),
      text_(std::move(text)),
      angle_(limited_radian(angle)),
      px_(axis_placement(center.x, parent_rect.left, parent_rect.right())),
      py_(axis_placement(center.y, parent_rect.top, parent_rect.bottom())) {
    define_cover();
}

double Comment::half_length() const {
    return std::max(kCharWidth, kCharWidth * static_cast<double>(text_.size())) / 2;
}

void Comment::set_parent_rect(const Rect& rc) {
    parent_rc_ = rc;
    center_ = {axis_coordinate(px_, rc.left, rc.right()), axis_coordinate(py_, rc.top, rc.bottom())};
    define_cover();
}

void Comment::define_cover() {
    const Point2 a = point_to_point(center_, angle_ + Angle{kPi}, half_length());
    const Point2 b = point_to_point(center_, angle_, half_length());
    set_cover(Cover({strip_node(a, b, kCharHeight / 2, MovementFreedom::All, CursorHint::SizeAll)}));
}

void Comment::move_by(double dx, double dy) {
    center_ = center_ + Point2{dx, dy};
    px_ = axis_placement(center_.x, parent_rc_.left, parent_rc_.right());
    py_ = axis_placement(center_.y, parent_rc_.top, parent_rc_.bottom());
    define_cover();
}

void Comment::start_rotation(Point2 pt) {
    rotation_.start(center_, angle_, pt);
}

bool Comment::move_node(int /*node*/, double dx, double dy, Point2 pt, MouseButton catcher) {
    if (catcher == MouseButton::Left) {
        move_by(dx, dy);
        return true;
    }
    if (const auto a = rotation_.step(pt)) {
        angle_ = limited_radian(*a);
        define_cover();
    }
    return true;
}

Rect Comment::bounds() const {
    const Point2 a = point_to_point(center_, angle_ + Angle{kPi}, half_length());
    const Point2 b = point_to_point(center_, angle_, half_length());
    return Rect::from_corners(a, b).inflated(kCharHeight / 2);
}

void Comment::describe_geometry(GeometryWriter& out) const {
    out.point(center_);
}

Point2 comment_recalc_on_resize(const Comment& c, const Rect& old_rc, const Rect& new_rc) {
    const Point2 p = c.center();
    const AxisPlacement px = axis_placement(p.x, old_rc.left, old_rc.right());
    const AxisPlacement py = axis_placement(p.y, old_rc.top, old_rc.bottom());
    return {axis_coordinate(px, new_rc.left, new_rc.right()), axis_coordinate(py, new_rc.top, new_rc.bottom())};
}

// ---------------------------------------------------------------- RectangleWithComments

RectangleWithComments::RectangleWithComments(Rect rc, double min_width, double min_height)
    : RectangleStandard(rc, Resizing::Any, min_width, min_height) {}

Comment& RectangleWithComments::add_comment(Point2 center, std::string text, Angle angle) {
    auto c = std::make_unique<Comment>(rect(), center, std::move(text), angle);
    c->set_parent_id(id());
    comments_.push_back(std::move(c));
    return *comments_.back();
}

void RectangleWithComments::remove_comment(ObjectId cid) {
    const auto it = std::find_if(comments_.begin(), comments_.end(), [cid](const auto& c) { return c->id() == cid; });
    if (it == comments_.end()) {
        throw Error(ErrorCode::UnknownObject, "comment " + std::to_string(cid.value) + " not found");
    }
    comments_.erase(it);
}

void RectangleWithComments::rect_changed(const Rect& /*old_rc*/) {
    for (const auto& c : comments_) c->set_parent_rect(rect());
}

void RectangleWithComments::into_mover(Mover& mover, std::size_t index) {
    mover.insert(index, *this);
    for (auto it = comments_.rbegin(); it != comments_.rend(); ++it) mover.insert(index, **it);
}

// ---------------------------------------------------------------- LinkedRectangles

LinkedRectangles::LinkedRectangles(std::vector<MoveableObject*> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw Error(ErrorCode::EmptyGroup, "linked rectangles need at least one member");
    }
    for (MoveableObject* m : members_) m->set_parent_id(id());
    define_cover();
}

void LinkedRectangles::define_cover() {
    std::vector<CoverNode> nodes;
    const auto rects = bounds_of(members_);
    for (const Rect& r : rects) nodes.push_back(rect_node(r));
    nodes.push_back(rect_node(frame_around(rects, 0.0)));
    set_cover(Cover(std::move(nodes)));
}

void LinkedRectangles::move_by(double dx, double dy) {
    translate_all(members_, dx, dy);
    define_cover();
}

bool LinkedRectangles::move_node(int /*node*/, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    move_by(dx, dy);
    return true;
}

Rect LinkedRectangles::bounds() const {
    return frame_around(bounds_of(members_), 0.0);
}

// ---------------------------------------------------------------- FrameGroup

namespace {

bool range_axis_active(double lo, double hi) {
    return lo < hi;
}

}  // namespace

FrameGroup::FrameGroup(Rect frame, RectRange range, std::string title, std::vector<MoveableObject*> elements)
    : frame_(frame), range_(range), title_(std::move(title)), elements_(std::move(elements)) {
    if (!(range.min_w > 0.0) || !(range.min_h > 0.0) || range.min_w > range.max_w || range.min_h > range.max_h ||
        frame.width < range.min_w || frame.width > range.max_w || frame.height < range.min_h ||
        frame.height > range.max_h) {
        throw Error(ErrorCode::InvalidArgument, "group frame outside its size range");
    }
    const bool w = range_axis_active(range.min_w, range.max_w);
    const bool h = range_axis_active(range.min_h, range.max_h);
    resizing_ = w && h ? Resizing::Any : w ? Resizing::WE : h ? Resizing::NS : Resizing::None;
    for (MoveableObject* e : elements_) {
        e->set_parent_id(id());
        const Point2 c = e->bounds().center();
        anchors_.push_back({(c.x - frame.left) / frame.width, (c.y - frame.top) / frame.height});
    }
    define_cover();
}

void FrameGroup::define_cover() {
    set_cover(standard_rect_cover(frame_, resizing_));
}

void FrameGroup::move_by(double dx, double dy) {
    frame_ = frame_.translated(dx, dy);
    translate_all(elements_, dx, dy);
    define_cover();
}

bool FrameGroup::move_node(int node, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    const RectPart part = standard_rect_part(resizing_, node);
    if (part == RectPart::Area) {
        move_by(dx, dy);
        return true;
    }
    frame_ = drag_rect_part(frame_, part, dx, dy, SizeLimits{range_.min_w, range_.min_h, range_.max_w, range_.max_h});
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const Point2 want{frame_.left + anchors_[i].x * frame_.width, frame_.top + anchors_[i].y * frame_.height};
        const Point2 have = elements_[i]->bounds().center();
        elements_[i]->move_by(want.x - have.x, want.y - have.y);
    }
    define_cover();
    return true;
}

// ---------------------------------------------------------------- ElasticGroup

ElasticGroup::ElasticGroup(std::vector<MoveableObject*> children, std::string title, double padding)
    : children_(std::move(children)), title_(std::move(title)), padding_(padding) {
    if (children_.empty()) {
        throw Error(ErrorCode::EmptyGroup, "elastic group needs at least one child");
    }
    for (MoveableObject* c : children_) {
        c->set_parent_id(id());
        c->set_change_listener([this] { adjust(); });
    }
    adjust();
}

Rect ElasticGroup::adjust() {
    if (children_.empty()) {
        throw Error(ErrorCode::EmptyGroup, "elastic group has no children");
    }
    frame_ = frame_around(bounds_of(children_), padding_);
    define_cover();
    return frame_;
}

void ElasticGroup::define_cover() {
    const Point2 tl = frame_.top_left();
    const Point2 tr = frame_.top_right();
    const Point2 br = frame_.bottom_right();
    const Point2 bl = frame_.bottom_left();
    std::vector<CoverNode> nodes;
    for (const auto& [a, b] : {std::pair{tl, tr}, std::pair{tr, br}, std::pair{br, bl}, std::pair{bl, tl}}) {
        nodes.push_back(strip_node(a, b, kDefaultHalfStrip, MovementFreedom::All, CursorHint::SizeAll));
    }
    nodes.push_back(rect_node(frame_));
    set_cover(Cover(std::move(nodes)));
}

void ElasticGroup::move_by(double dx, double dy) {
    translate_all(children_, dx, dy);
    adjust();
}

bool ElasticGroup::move_node(int /*node*/, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    move_by(dx, dy);
    return true;
}

void ElasticGroup::into_mover(Mover& mover, std::size_t index) {
    mover.insert(index, *this);
    for (auto it = children_.rbegin(); it != children_.rend(); ++it) (*it)->into_mover(mover, index);
}

// ---------------------------------------------------------------- SimpleFrame

SimpleFrame::SimpleFrame(Rect frame, EncloseQuery query) : frame_(frame), query_(std::move(query)) {
    reenclose();
    define_cover();
}

void SimpleFrame::reenclose() {
    enclosed_ = query_ ? query_(frame_) : std::vector<MoveableObject*>{};
}

void SimpleFrame::define_cover() {
    const Point2 tl = frame_.top_left();
    const Point2 tr = frame_.top_right();
    const Point2 br = frame_.bottom_right();
    const Point2 bl = frame_.bottom_left();
    std::vector<CoverNode> nodes;
    for (const Point2 p : {tl, tr, br, bl}) {
        CoverNode n = circle_node(p, kDefaultCornerRadius);
        n.visible = true;
        nodes.push_back(n);
    }
    for (const auto& [a, b] : {std::pair{tl, tr}, std::pair{tr, br}, std::pair{br, bl}, std::pair{bl, tl}}) {
        nodes.push_back(strip_node(a, b, kDefaultHalfStrip, MovementFreedom::All, CursorHint::SizeAll));
    }
    // Degenerate selections still need a valid interior node.
    const Rect inner{frame_.left, frame_.top, std::max(frame_.width, 1.0), std::max(frame_.height, 1.0)};
    nodes.push_back(rect_node(inner, MovementFreedom::Transparent, CursorHint::Default));
    set_cover(Cover(std::move(nodes)));
}

void SimpleFrame::move_by(double dx, double dy) {
    frame_ = frame_.translated(dx, dy);
    for (MoveableObject* o : enclosed_) {
        o->move_by(dx, dy);
        o->notify_changed();
    }
    define_cover();
}

bool SimpleFrame::move_node(int node, double dx, double dy, Point2 /*pt*/, MouseButton /*catcher*/) {
    static constexpr std::array kCorners{RectPart::TopLeft, RectPart::TopRight, RectPart::BottomRight,
                                         RectPart::BottomLeft};
    if (node >= 0 && node < 4) {
        frame_ = drag_rect_part(frame_, kCorners[static_cast<std::size_t>(node)], dx, dy, SizeLimits{1.0, 1.0});
        reenclose();
        define_cover();
        return true;
    }
    move_by(dx, dy);
    return true;
}

}  // namespace coverkit
