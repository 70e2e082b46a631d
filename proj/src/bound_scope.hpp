#pragma once

#include "hyperspec/coloring.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec::detail {

// Checks that the bound for this mode applies to h and returns c for c-uniform
// all-inputs input (0 otherwise). Throws ModeMismatch.
int bound_scope(const OrientedHypergraph& h, const ColoringMode& mode);

} // namespace hyperspec::detail
