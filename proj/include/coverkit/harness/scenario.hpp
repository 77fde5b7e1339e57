#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coverkit/error.hpp"
#include "coverkit/figures/holes.hpp"
#include "coverkit/figures/rectangle.hpp"
#include "coverkit/groups.hpp"
#include "coverkit/mover.hpp"
#include "coverkit/widgets.hpp"

namespace coverkit::cmd {

struct Bounds { double w, h; };
struct Clip { Clipping level; };
struct Covers { bool on; };
struct AddRect { std::string id; Rect rc; Resizing resizing; };
struct AddPolygon { std::string id; Point2 center; double radius; int n; };
struct AddPerforated { std::string id; Point2 center; double r_inner, r_outer; int n; };
struct AddChatoyant { std::string id; Point2 center; double radius; int n; };
struct AddCircle { std::string id; Point2 center; double radius; };
struct AddRing { std::string id; Point2 center; double r_inner, r_outer; };
struct AddStrip { std::string id; Point2 a, b; double radius; };
struct AddCircPoly { std::string id; Point2 center; double radius; int n; double hole_radius; };
struct AddHoles { std::string id; Rect rc; std::vector<AreaWithHoles::Hole> holes; };
struct AddWidget { std::string id; Rect rc; SizeWH min, max; bool movable; };
struct AddLabel { std::string id; Point2 anchor; std::string text; };
struct AddPrimitive { std::string id; PrimitiveFigure::Shape shape; std::optional<MouseButton> button; };
struct AddCommented { std::string id; Rect rc; };
struct AddComment { std::string id; std::string parent; Point2 center; std::string text; };
struct GroupElastic { std::string id; std::vector<std::string> children; };
struct GroupFrame { std::string id; Rect rc; RectRange range; std::vector<std::string> children; };
struct GroupLinked { std::string id; std::vector<std::string> children; };
struct Plug { std::string id; std::size_t index; };
struct Press { Point2 pt; MouseButton button; };
struct Drag { Point2 pt; };
struct Release {};
struct Sense { Point2 pt; };
struct Select { Point2 a, b; };
struct Popup { std::string id; };
struct Renew {};
struct Dump {};

}  // namespace coverkit::cmd

namespace coverkit {

using Command = std::variant<cmd::Bounds, cmd::Clip, cmd::Covers, cmd::AddRect, cmd::AddPolygon, cmd::AddPerforated,
                             cmd::AddChatoyant, cmd::AddCircle, cmd::AddRing, cmd::AddStrip, cmd::AddCircPoly,
                             cmd::AddHoles, cmd::AddWidget, cmd::AddLabel, cmd::AddPrimitive, cmd::AddCommented,
                             cmd::AddComment, cmd::GroupElastic, cmd::GroupFrame, cmd::GroupLinked, cmd::Plug,
                             cmd::Press, cmd::Drag, cmd::Release, cmd::Sense, cmd::Select, cmd::Popup, cmd::Renew,
                             cmd::Dump>;

struct ScriptLine {
    std::size_t line = 0;  // 1-based
    Command command;
};

using Scenario = std::vector<ScriptLine>;

/// Error tied to a script line.
class ScenarioError : public Error {
public:
    ScenarioError(std::size_t line, ErrorCode code, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses one line; nullopt for blank and comment lines. Throws Error(Parse).
std::optional<Command> parse_command(std::string_view line);

/// Whole script; throws ScenarioError citing the offending line.
Scenario parse_scenario(std::string_view text);

/// True for commands that can change scene state.
bool is_state_changing(const Command& command);

}  // namespace coverkit
