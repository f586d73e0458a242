#pragma once

#include <optional>
#include <vector>

#include "gip/types.hpp"

namespace gip::detail {

// Modified Gram-Schmidt. Appends the component of raw orthogonal to basis
// when its norm exceeds eps; returns false for (numerically) dependent input.
bool gs_extend(std::vector<Vec>& basis, const Vec& raw, double eps);

// Unit vector orthogonal to the span of basis, obtained by orthogonalizing
// canonical basis vectors; nullopt when the span is already full.
std::optional<Vec> orthogonal_complement_dir(const std::vector<Vec>& basis,
                                             int n, double eps);

}  // namespace gip::detail
