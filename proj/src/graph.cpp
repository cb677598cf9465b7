#include "bufcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bufcol/rng.hpp"

namespace bufcol {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(n);
    labels_.resize(n);
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nbrs : adj_) total += nbrs.size();
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

Graph crown_graph(int n) {
    if (n < 1) throw std::invalid_argument("crown graph requires n >= 1");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.set_label(i, "v1," + std::to_string(i + 1));
        g.set_label(n + i, "v2," + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, n + j);
    return g;
}

namespace {

std::string subset_label(const std::vector<int>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(subset[i]);
    }
    out += '}';
    return out;
}

}  // namespace

Graph kneser_graph(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("kneser graph requires n >= 1 and k >= 1");
    if (k > n) throw std::invalid_argument("kneser graph requires k <= n");
    if (n > 62) throw SizeLimitError("kneser graph: ground set larger than 62 is not supported");

    // C(n, k) with an explicit cap; adjacency construction is quadratic in
    // the vertex count.
    constexpr std::uint64_t kMaxVertices = 200000;
    std::uint64_t count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (count > kMaxVertices)
            throw SizeLimitError("kneser graph would have more than " +
                                 std::to_string(kMaxVertices) + " vertices");
    }

    // Lexicographic k-subsets of {1..n}, each encoded as a bitmask.
    std::vector<std::uint64_t> masks;
    masks.reserve(count);
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 1);
    Graph g(static_cast<int>(count));
    for (int idx = 0;; ++idx) {
        std::uint64_t m = 0;
        for (int e : subset) m |= std::uint64_t{1} << e;
        masks.push_back(m);
        g.set_label(idx, subset_label(subset));

        int pos = k - 1;
        while (pos >= 0 && subset[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
    }

    for (std::size_t a = 0; a < masks.size(); ++a)
        for (std::size_t b = a + 1; b < masks.size(); ++b)
            if ((masks[a] & masks[b]) == 0) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    Graph g;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) throw ParseError(line_no, "expected a vertex count");
            std::string rest;
            if (fields >> rest) throw ParseError(line_no, "unexpected trailing text after vertex count");
            g = Graph(n);
            continue;
        }

        int u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError(line_no, "expected two vertex indices");
        std::string rest;
        if (fields >> rest) throw ParseError(line_no, "unexpected trailing text after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }

    if (n < 0) throw ParseError(line_no, "missing vertex count");
    return g;
}

ArrivalOrder linear_order(int n) {
    if (n < 1) throw std::invalid_argument("linear order requires n >= 1");
    ArrivalOrder order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

ArrivalOrder alternate_order(int n) {
    if (n < 1) throw std::invalid_argument("alternate order requires n >= 1");
    ArrivalOrder order;
    order.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        order.push_back(i);
        order.push_back(n + i);
    }
    return order;
}

ArrivalOrder random_order(const Graph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    ArrivalOrder order(n);
    std::iota(order.begin(), order.end(), 0);
    RandomSource rand(seed);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rand.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

bool is_permutation(const ArrivalOrder& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void require_permutation(const Graph& g, const ArrivalOrder& order) {
    if (!is_permutation(order, g.vertex_count()))
        throw std::invalid_argument("arrival order is not a permutation of the graph's vertices");
}

}  // namespace bufcol
