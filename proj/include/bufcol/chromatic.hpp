#pragma once

#include "bufcol/graph.hpp"

namespace bufcol {

/// Exact chromatic number by branch and bound, for small graphs: greedy
/// clique and colouring bounds, then a saturation-guided backtracking
/// k-colourability search for each k between them. An edgeless non-empty
/// graph has chromatic number 1; the zero-vertex graph has 0.
///
/// Graphs with more than `vertex_limit` vertices are rejected with a
/// SizeLimitError suggesting the closed form n - 2k + 2 for Kneser graphs.
int chromatic_number_exact(const Graph& g, int vertex_limit = 16);

}  // namespace bufcol
