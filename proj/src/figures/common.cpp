#include "coverkit/figures/common.hpp"

namespace coverkit {

void RotationTracker::start(Point2 center, Angle current, Point2 press) {
    center_ = center;
    compensation_ = press == center ? Angle{} : limited_radian(line_angle(center, press) - current);
}

std::optional<Angle> RotationTracker::step(Point2 pointer) const {
    if (pointer == center_) return std::nullopt;
    return line_angle(center_, pointer) - compensation_;
}

void ScaleTracker::start(double value, Point2 center, Point2 press) {
    const double d = distance(center, press);
    fixed_ = value;
    // A press on the center itself has no usable lever; keep the size fixed.
    ratio_ = d > 1e-9 ? value / d : 0.0;
}

double ScaleTracker::value_at(Point2 center, Point2 pointer) const {
    return ratio_ > 0.0 ? ratio_ * distance(center, pointer) : fixed_;
}

}  // namespace coverkit
