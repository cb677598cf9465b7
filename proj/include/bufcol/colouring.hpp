#pragma once

#include <vector>

#include "bufcol/graph.hpp"

namespace bufcol {

/// A complete proper colouring: colour[v] is the positive colour of vertex v,
/// count is the number of distinct colours used.
struct Colouring {
    std::vector<int> colour;
    int count = 0;
};

/// Number of distinct colours in the map, recomputed from the assignment.
int colours_used(const Colouring& c);

/// First Fit: each vertex, in arrival order, takes the smallest positive
/// colour absent among its already-coloured neighbours. Deterministic.
Colouring first_fit(const Graph& g, const ArrivalOrder& order);

/// True iff colours differ across every edge and every vertex is coloured.
bool is_proper(const Graph& g, const Colouring& c);

}  // namespace bufcol
