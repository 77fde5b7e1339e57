#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coverkit/harness/scenario.hpp"
#include "coverkit/scene.hpp"

namespace coverkit {

inline constexpr double kClickTolerance = 3.0;

enum class Gesture { Click, Drag };

const char* to_string(Gesture gesture);

/// Click iff the pointer travelled at most kClickTolerance between press and release.
Gesture classify_gesture(Point2 press, Point2 release);

struct ClickReport {
    ObjectId object;
    MouseButton button = MouseButton::Left;
    Point2 press;
    Point2 release;
    Gesture gesture = Gesture::Drag;
};

struct ExecResult {
    std::optional<std::string> dump;      // set by `dump`
    std::optional<CursorHint> cursor;     // set by `sense`
};

/// Executes scenario commands against one scene.
class Session {
public:
    Session() = default;

    /// Throws Error; the scene is left as the failing command found it.
    ExecResult execute(const Command& command);

    Scene& scene() { return scene_; }
    const Scene& scene() const { return scene_; }
    bool covers_enabled() const { return covers_; }
    const std::vector<ClickReport>& clicks() const { return clicks_; }
    /// Rubber band in progress: anchor of a left press on empty space.
    std::optional<Point2> band_anchor() const { return band_; }

private:
    void add_object(std::string name, std::unique_ptr<MoveableObject> obj);
    std::vector<MoveableObject*> top_level_children(const std::vector<std::string>& names);
    void press(Point2 pt, MouseButton button);
    void release();

    Scene scene_;
    bool covers_ = false;
    std::optional<Point2> press_pt_;
    MouseButton press_button_ = MouseButton::Left;
    Point2 last_pt_;
    std::optional<Point2> band_;
    std::vector<ClickReport> clicks_;
};

/// Runs a parsed scenario; returns one scene block per `dump`.
/// Execution errors are rethrown as ScenarioError with the line number.
std::vector<std::string> run_scenario(const Scenario& scenario);

}  // namespace coverkit
