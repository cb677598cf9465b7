#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "bufcol/errors.hpp"

namespace bufcol {

/// Undirected simple graph on vertices 0..n-1. Adjacency is stored as one
/// hash set per vertex so that membership tests are O(1); the colouring
/// routines probe "is colour c blocked at v" by scanning v's neighbours.
/// Immutable once built, safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;

    /// Inserts the undirected edge {u, v}. Rejects self-loops and
    /// out-of-range endpoints; duplicate insertions are no-ops.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const std::unordered_set<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Optional display label, e.g. "v1,3" for crown vertices or "{1,2}"
    /// for Kneser vertices. Empty when unset.
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string text) { labels_[v] = std::move(text); }

private:
    std::vector<std::unordered_set<int>> adj_;
    std::vector<std::string> labels_;
};

/// Crown graph on 2n vertices: complete bipartite K_{n,n} minus a perfect
/// matching. Vertex i-1 is v_{1,i} and vertex n+i-1 is v_{2,i} (1 <= i <= n);
/// v_{1,i} and v_{2,j} are adjacent iff i != j, giving n(n-1) edges.
Graph crown_graph(int n);

/// Kneser graph: vertices are the k-element subsets of {1..n} in
/// lexicographic order, adjacent iff disjoint. K_{5,2} is the Petersen graph,
/// K_{n,1} is the complete graph, and k > n/2 gives an edgeless graph.
Graph kneser_graph(int n, int k);

/// Parses the edge-list text format: first line is the vertex count, each
/// following non-empty line is "u v" with 0-based indices, lines starting
/// with '#' are ignored. Duplicate edges collapse; malformed lines,
/// out-of-range indices and self-loops raise ParseError naming the line.
Graph graph_from_edge_list(const std::string& text);

/// An arrival order: some permutation of 0..n-1.
using ArrivalOrder = std::vector<int>;

/// Crown presentation orders, using the crown_graph(n) vertex convention.
/// Linear presents all of V1 then all of V2; alternate interleaves the
/// sides as v_{1,1}, v_{2,1}, v_{1,2}, v_{2,2}, ...
ArrivalOrder linear_order(int n);
ArrivalOrder alternate_order(int n);

/// Uniform random permutation of the graph's vertices via Fisher-Yates on
/// a seeded RandomSource. Deterministic for a fixed seed.
ArrivalOrder random_order(const Graph& g, std::uint64_t seed);

/// True iff `order` is a permutation of 0..n-1.
bool is_permutation(const ArrivalOrder& order, int n);

/// Throws std::invalid_argument unless `order` is a permutation of the
/// graph's vertices.
void require_permutation(const Graph& g, const ArrivalOrder& order);

}  // namespace bufcol
