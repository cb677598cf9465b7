#pragma once

#include <vector>

#include "bufcol/colouring.hpp"
#include "bufcol/graph.hpp"
#include "bufcol/rng.hpp"

namespace bufcol {

/// One proper colouring of the queued vertices, consistent with the fixed
/// colours. `assignment` follows queue order; `key` is the same colours
/// sorted descending, the tie-breaking criterion of the buffered algorithm.
struct CandidateColouring {
    std::vector<int> assignment;
    std::vector<int> key;
};

/// Enumerates the proper assignments of the queued vertices that minimise the
/// descending-sorted colour key (compared lexicographically, so the largest
/// colour is minimised first, then the next largest, and so on). Colours are
/// drawn from 1..(C_max + queue size), where C_max is the largest fixed
/// colour; a first-fit sweep of the queue stays within that range, so the
/// minimal key always lies inside it. The returned list is never empty and is
/// sorted lexicographically by assignment.
///
/// `fixed_colour` maps every vertex to its final colour, 0 when not yet
/// coloured. Queued vertices must be uncoloured and distinct; an improper
/// fixed colouring is a contract violation.
std::vector<CandidateColouring> enumerate_candidates(const Graph& g,
                                                     const std::vector<int>& fixed_colour,
                                                     const std::vector<int>& queue);

/// Online colouring with a FIFO lookahead buffer of capacity b:
///
///   1. The first arriving vertex is coloured 1 immediately.
///   2. Subsequent arrivals fill the buffer to capacity.
///   3. While the buffer is non-empty: the minimal-key candidate colourings
///      of the buffered vertices are enumerated, one is drawn uniformly at
///      random among the r candidates, the head vertex keeps its colour from
///      that candidate permanently, and the next arrival (if any) enters the
///      buffer. All non-head colours are temporary and are rederived on the
///      next step.
///
/// Once arrivals are exhausted the buffer drains by the same rule, finalising
/// one head per step on the shrinking queue with fresh randomisation. With
/// b = 1 every step has a single candidate (the first-fit colour), so the
/// result coincides with first_fit for every seed.
Colouring buffered_colouring(const Graph& g, const ArrivalOrder& order, int b,
                             RandomSource& rand);

namespace detail {

/// Enumeration core shared with the exact-distribution code: no contract
/// validation, assignments only (keys implied). Results are lexicographically
/// ordered by assignment.
std::vector<std::vector<int>> minimal_assignments(const Graph& g,
                                                  const std::vector<int>& fixed_colour,
                                                  const std::vector<int>& queue);

}  // namespace detail

}  // namespace bufcol
