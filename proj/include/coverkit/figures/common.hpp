#pragma once

#include <optional>

#include "coverkit/geometry.hpp"

namespace coverkit {

inline constexpr double kSmallNodeRadius = 5.0;    // border circles and side strips
inline constexpr double kArcSpacing = 8.0;         // < 2 * kSmallNodeRadius, so neighbours overlap
inline constexpr double kRingSectorSpacing = 12.0; // outer-arc length per ring sector
inline constexpr double kBorderHalfDepth = 4.0;    // radial half-depth of border trapezes
inline constexpr double kMinSize = 10.0;           // default floor for radii and sides
inline constexpr double kMinRingGap = 8.0;         // r_inner <= r_outer - gap

/// Rotation bookkeeping shared by every rotatable figure.
///
/// start() captures compensation = limited_radian(line_angle(center, press) - angle);
/// step() then yields angle = line_angle(center, pointer) - compensation.
class RotationTracker {
public:
    void start(Point2 center, Angle current, Point2 press);
    /// New base angle for `pointer`; nullopt when the pointer sits on the center.
    std::optional<Angle> step(Point2 pointer) const;

    Point2 center() const { return center_; }
    Angle compensation() const { return compensation_; }

private:
    Point2 center_;
    Angle compensation_;
};

/// Ratio-based scaling: value = ratio * distance(center, pointer), where the
/// ratio is fixed at the press so the press point itself is an identity.
class ScaleTracker {
public:
    void start(double value, Point2 center, Point2 press);
    double value_at(Point2 center, Point2 pointer) const;
    double ratio() const { return ratio_; }

private:
    double ratio_ = 1.0;
    double fixed_ = 0.0;
};

}  // namespace coverkit
