#pragma once

#include "cyp/multigraph.hpp"

namespace cyp {

// Exact planarity test (left-right criterion). Loops and multiedges are
// stripped first; they never affect planarity.
bool is_planar(const MultiGraph& g);

}  // namespace cyp
