#pragma once

#include "zdmult/numeric.hpp"

namespace zdmult {

// All integer points with sup-norm exactly `radius`, in lexicographic order.
// Searches iterate shells of increasing radius, so the global candidate
// order is: increasing sup-norm, then lexicographic.
std::vector<IntVec> box_points(int dim, long radius);

// All nonzero integer points with sup-norm <= radius, lexicographic order.
std::vector<IntVec> cube_points(int dim, long radius);

}  // namespace zdmult
