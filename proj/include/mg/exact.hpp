#pragma once

#include "mg/multigraph.hpp"

namespace mg {

/// Exact chromatic index by iterative-deepening backtracking: colours are
/// introduced in increasing order (symmetry breaking) and the search starts
/// at max{Delta, ceil(rho)}. Independent of the colouring engine; intended as
/// a test oracle for small instances. Rejects graphs with more than
/// `max_instances` edge instances.
long long exact_chromatic_index(const Multigraph& g, long long max_instances = 16);

}  // namespace mg
