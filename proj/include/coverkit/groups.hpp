#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "coverkit/figures/rectangle.hpp"
#include "coverkit/moveable.hpp"

namespace coverkit {

// ---------------------------------------------------------------- comments

/// Relative position inside the parent span on one axis.
struct Fraction {
    double f = 0.0;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Signed pixels beyond the nearest edge: negative left of / above the span.
struct EdgeOffset {
    double d = 0.0;
    friend bool operator==(const EdgeOffset&, const EdgeOffset&) = default;
};

using AxisPlacement = std::variant<Fraction, EdgeOffset>;

/// Fraction inside [lo, hi], EdgeOffset outside.
AxisPlacement axis_placement(double coord, double lo, double hi);
double axis_coordinate(const AxisPlacement& placement, double lo, double hi);

/// Text attached to a parent rectangle. Moving the comment recomputes its
/// placement; moving or resizing the parent recomputes the comment's center.
class Comment : public MoveableObject {
public:
    Comment(const Rect& parent_rect, Point2 center, std::string text, Angle angle = Angle{});

    Point2 center() const { return center_; }
    const std::string& text() const { return text_; }
    const AxisPlacement& placement_x() const { return px_; }
    const AxisPlacement& placement_y() const { return py_; }
    const Rect& parent_rect() const { return parent_rc_; }

    /// Parent changed: keep the placement, recompute the center.
    void set_parent_rect(const Rect& rc);

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void start_rotation(Point2 pt) override;
    std::string_view kind() const override { return "comment"; }
    ObjectRole role() const override { return ObjectRole::Info; }
    Rect bounds() const override;
    Angle angle() const override { return angle_; }
    void describe_geometry(GeometryWriter& out) const override;

private:
    double half_length() const;

    Rect parent_rc_;
    Point2 center_;
    std::string text_;
    Angle angle_;
    AxisPlacement px_;
    AxisPlacement py_;
    RotationTracker rotation_;
};

/// Center of `c` after its parent goes from `old_rc` to `new_rc`.
Point2 comment_recalc_on_resize(const Comment& c, const Rect& old_rc, const Rect& new_rc);

/// Fully resizable rectangle owning any number of comments; the comments are
/// registered ahead of the rectangle so they win where they overlap it.
class RectangleWithComments : public RectangleStandard {
public:
    explicit RectangleWithComments(Rect rc, double min_width = kMinSize, double min_height = kMinSize);

    Comment& add_comment(Point2 center, std::string text, Angle angle = Angle{});
    /// Throws UnknownObject when `id` is not one of this rectangle's comments.
    void remove_comment(ObjectId id);
    std::size_t comment_count() const { return comments_.size(); }
    Comment& comment(std::size_t i) const { return *comments_.at(i); }

    void into_mover(Mover& mover, std::size_t index) override;
    std::string_view kind() const override { return "commented"; }
    ObjectRole role() const override { return ObjectRole::Composite; }

protected:
    void rect_changed(const Rect& old_rc) override;

private:
    std::vector<std::unique_ptr<Comment>> comments_;
};

// ---------------------------------------------------------------- groups

/// Rigid, non-resizable union of member objects. One node per member plus a
/// final node over their bounding box so gaps between members stay sensitive.
class LinkedRectangles : public MoveableObject {
public:
    /// Members must outlive the group; their parent ids are set to the group.
    explicit LinkedRectangles(std::vector<MoveableObject*> members);

    const std::vector<MoveableObject*>& members() const { return members_; }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "linked"; }
    ObjectRole role() const override { return ObjectRole::Control; }
    Rect bounds() const override;

private:
    std::vector<MoveableObject*> members_;
};

struct RectRange {
    double min_w = 0.0;
    double max_w = 0.0;
    double min_h = 0.0;
    double max_h = 0.0;
};

/// Framed group with a fixed layout policy: inner elements keep their
/// fractional anchors inside the frame when it is resized.
class FrameGroup : public MoveableObject {
public:
    /// Throws InvalidArgument when `frame` violates `range`.
    FrameGroup(Rect frame, RectRange range, std::string title, std::vector<MoveableObject*> elements);

    const Rect& frame() const { return frame_; }
    const RectRange& range() const { return range_; }
    Resizing resizing() const { return resizing_; }
    const std::vector<MoveableObject*>& elements() const { return elements_; }
    Point2 anchor(std::size_t i) const { return anchors_.at(i); }

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "group"; }
    ObjectRole role() const override { return ObjectRole::Control; }
    Rect bounds() const override { return frame_; }

private:
    Rect frame_;
    RectRange range_;
    std::string title_;
    Resizing resizing_;
    std::vector<MoveableObject*> elements_;
    std::vector<Point2> anchors_;  // (fx, fy) of each element's center
};

/// Group of individually moveable children inside a frame that always
/// wraps them with `padding` to spare.
class ElasticGroup : public MoveableObject {
public:
    static constexpr double kDefaultPadding = 8.0;

    /// Children must outlive the group. Throws EmptyGroup for no children.
    ElasticGroup(std::vector<MoveableObject*> children, std::string title, double padding = kDefaultPadding);

    const std::vector<MoveableObject*>& children() const { return children_; }
    double padding() const { return padding_; }
    const Rect& frame() const { return frame_; }

    /// Recomputes the frame around the children.
    Rect adjust();

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    void into_mover(Mover& mover, std::size_t index) override;
    std::string_view kind() const override { return "elastic"; }
    ObjectRole role() const override { return ObjectRole::ControlGroup; }
    Rect bounds() const override { return frame_; }

private:
    std::vector<MoveableObject*> children_;
    std::string title_;
    double padding_;
    Rect frame_;
};

/// Temporary rubber-band frame. Caught by its border only: corners resize
/// the selection and re-enclose, strips move every enclosed object.
class SimpleFrame : public MoveableObject {
public:
    using EncloseQuery = std::function<std::vector<MoveableObject*>(const Rect&)>;

    SimpleFrame(Rect frame, EncloseQuery query);

    const Rect& frame() const { return frame_; }
    const std::vector<MoveableObject*>& enclosed() const { return enclosed_; }
    void reenclose();

    void define_cover() override;
    void move_by(double dx, double dy) override;
    bool move_node(int node, double dx, double dy, Point2 pt, MouseButton catcher) override;
    std::string_view kind() const override { return "selection"; }
    ObjectRole role() const override { return ObjectRole::Selection; }
    Rect bounds() const override { return frame_; }

private:
    Rect frame_;
    EncloseQuery query_;
    std::vector<MoveableObject*> enclosed_;
};

}  // namespace coverkit
