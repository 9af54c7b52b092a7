#pragma once

#include "fourstate/t4.hpp"

namespace fourstate {

// The embedded reference dataset: the four states 0, e1, e2, e3, the three
// staircase orderings with their (p, c, k) tables, and the twelve frequency
// nodes. Everything downstream (the degree-11 operator family, certificates,
// laminates) is derived from this.
LargeT4Data reference_dataset();

} // namespace fourstate
