#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "bufcol/errors.hpp"
#include "bufcol/graph.hpp"

namespace bufcol {

/// Exact arbitrary-precision rational. Always canonical: positive
/// denominator, lowest terms.
using Rational = mpq_class;

/// Exact law of the distinct-colour count of a buffered-colouring run:
/// every random branch is explored and weighted by the product of its 1/r
/// candidate choices. Probabilities are exact rationals (r may be 3 or more,
/// so weights need not be dyadic); entries with zero mass are absent and the
/// total is exactly 1.
struct OutcomeDistribution {
    std::map<int, Rational> pmf;
    std::uint64_t branches = 0;  ///< number of leaves explored

    Rational mean() const;
    Rational probability(int colour_count) const;  ///< 0 when absent
};

/// Exhaustively enumerates the random branches of buffered_colouring on the
/// given order and buffer capacity. Throws BranchCapExceeded once more than
/// `branch_cap` leaves have been visited.
OutcomeDistribution exact_outcome_distribution(const Graph& g, const ArrivalOrder& order,
                                               int b, std::uint64_t branch_cap = 10'000'000);

/// Worst case over every arrival order: the maximum distinct-colour count
/// reachable over all n! orders and all random branches with buffer b.
/// Guarded by `order_limit` on the vertex count.
int worst_case_colours(const Graph& g, int b, int order_limit = 8);

}  // namespace bufcol
