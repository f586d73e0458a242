#pragma once

#include <array>
#include <vector>

#include "gip/types.hpp"

namespace gip::detail {

// Triangulated boundary of the convex hull of full-dimensional 3-D points,
// each triangle counterclockwise seen from outside. Throws InvalidSpec when
// the points are affinely degenerate (fewer than 4, or within a plane).
std::vector<std::array<int, 3>> convex_hull_3d(const std::vector<Vec>& pts);

}  // namespace gip::detail
