#pragma once

#include <cstdint>
#include <map>

#include "bufcol/exact.hpp"

namespace bufcol {

/// Closed-form law of the distinct-colour count for a crown graph on 2n
/// vertices presented in alternate order with buffer capacity 2:
///
///   Pr(C = k) = 2^-(k-1)  for 2 <= k < n,
///   Pr(C = n) = 2^-(n-2).
///
/// The support is 2..n and the mass sums to exactly 1.
std::map<int, Rational> crown_b2_pmf(int n);

/// Expectation of that law, computed by direct summation of the pmf. The
/// summation yields 3 - 2^-(n-2) (note that n = 2 forces a point mass at 2,
/// so the mean is exactly 2 there).
Rational crown_b2_mean(int n);

/// Tail Pr(C >= m) = 2^-(m-2) of the same law, for 2 <= m <= n.
Rational crown_b2_tail(int n, int m);

/// Chromatic number of the Kneser graph K_{n,k}: n - 2k + 2 when n >= 2k,
/// and 1 when k > n/2 (the graph is edgeless but non-empty).
int kneser_chromatic(int n, int k);

/// Ratio of colours used by an online algorithm to the chromatic number,
/// as a reduced rational. The class-level performance ratio is the maximum
/// of this over the graphs of a class.
Rational performance_ratio(int alg_colours, int chi);

/// Iterated binary logarithm: the least j such that applying log2 j times
/// to n gives a value <= 1. Bipartite graphs admit online colourings with
/// at most about 2 log*2(n) colours, which the verification report quotes.
int iterated_log2(std::uint64_t n);

}  // namespace bufcol
