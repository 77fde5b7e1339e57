#pragma once

#include <string>

#include "coverkit/scene.hpp"

namespace coverkit {

/// Fixed 3 decimals; negative zero prints as 0.000.
std::string format_real(double v);

/// One line per queue entry, queue order:
///   NAME KIND Z NODECOUNT ANGLE X Y W H [| geometry tokens]
/// preceded by a `scene <count>` header. LF line ends.
std::string scene_block(const Scene& scene);

/// Every cover node in queue order, after a `covers <count>` header:
///   NAME NODE SHAPE FREEDOM CURSOR visible|hidden COORDS
/// COORDS: circle `cx cy r`, strip `ax ay bx by r`, polygon `k x1 y1 ... xk yk`.
std::string covers_block(const Scene& scene);

}  // namespace coverkit
