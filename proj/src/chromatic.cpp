#include "bufcol/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace bufcol {

namespace {

struct SearchGraph {
    int n = 0;
    std::vector<std::vector<int>> nbrs;
    std::vector<int> degree;
};

SearchGraph build(const Graph& g) {
    SearchGraph s;
    s.n = g.vertex_count();
    s.nbrs.resize(s.n);
    s.degree.resize(s.n);
    for (int v = 0; v < s.n; ++v) {
        s.nbrs[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());
        std::sort(s.nbrs[v].begin(), s.nbrs[v].end());
        s.degree[v] = static_cast<int>(s.nbrs[v].size());
    }
    return s;
}

std::vector<int> greedy_clique(const SearchGraph& g, const Graph& adj) {
    std::vector<int> by_degree(g.n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return g.degree[a] > g.degree[b]; });

    std::vector<int> best;
    for (int seed : by_degree) {
        if (g.degree[seed] + 1 <= static_cast<int>(best.size())) break;
        std::vector<int> clique{seed};
        for (int u : by_degree) {
            if (u == seed) continue;
            bool joins = true;
            for (int c : clique)
                if (!adj.adjacent(u, c)) {
                    joins = false;
                    break;
                }
            if (joins) clique.push_back(u);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

/// Backtracking k-colourability with saturation-guided vertex selection.
/// The seed clique is precoloured 1..|clique| (sound: colours of any proper
/// colouring can be renamed to match), and each vertex may open at most one
/// fresh colour index, which removes colour-permutation symmetry.
class KColourSearch {
public:
    KColourSearch(const SearchGraph& g, int k, const std::vector<int>& clique)
        : g_(g), k_(k), words_((k + 63) / 64) {
        colour_.assign(g_.n, 0);
        forbidden_.assign(static_cast<std::size_t>(g_.n) * words_, 0);
        forbid_count_.assign(static_cast<std::size_t>(g_.n) * (k_ + 1), 0);
        for (int v : clique) {
            if (max_used_ == k_) { infeasible_seed_ = true; return; }
            assign(v, ++max_used_);
        }
    }

    bool run() {
        if (infeasible_seed_) return false;
        return dfs();
    }

private:
    bool colour_allowed(int v, int c) const {
        return !(forbidden_[static_cast<std::size_t>(v) * words_ + (c - 1) / 64] >>
                     ((c - 1) % 64) &
                 1);
    }

    int saturation(int v) const {
        int bits = 0;
        for (int w = 0; w < words_; ++w)
            bits += std::popcount(forbidden_[static_cast<std::size_t>(v) * words_ + w]);
        return bits;
    }

    void assign(int v, int c) {
        colour_[v] = c;
        ++coloured_;
        for (int w : g_.nbrs[v]) {
            if (++forbid_count_[static_cast<std::size_t>(w) * (k_ + 1) + c] == 1)
                forbidden_[static_cast<std::size_t>(w) * words_ + (c - 1) / 64] |=
                    std::uint64_t{1} << ((c - 1) % 64);
        }
    }

    void unassign(int v, int c) {
        colour_[v] = 0;
        --coloured_;
        for (int w : g_.nbrs[v]) {
            if (--forbid_count_[static_cast<std::size_t>(w) * (k_ + 1) + c] == 0)
                forbidden_[static_cast<std::size_t>(w) * words_ + (c - 1) / 64] &=
                    ~(std::uint64_t{1} << ((c - 1) % 64));
        }
    }

    bool dfs() {
        if (coloured_ == g_.n) return true;

        int pick = -1;
        int pick_sat = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (colour_[v] != 0) continue;
            const int sat = saturation(v);
            if (sat >= k_) return false;  // dead vertex, no colour can ever fit
            if (sat > pick_sat || (sat == pick_sat && g_.degree[v] > g_.degree[pick])) {
                pick = v;
                pick_sat = sat;
            }
        }

        const int cap = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= cap; ++c) {
            if (!colour_allowed(pick, c)) continue;
            const int previous_max = max_used_;
            max_used_ = std::max(max_used_, c);
            assign(pick, c);
            if (dfs()) return true;
            unassign(pick, c);
            max_used_ = previous_max;
        }
        return false;
    }

    const SearchGraph& g_;
    int k_;
    int words_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> forbid_count_;
    int coloured_ = 0;
    int max_used_ = 0;
    bool infeasible_seed_ = false;
};

int dsatur_greedy_colours(const SearchGraph& g) {
    std::vector<int> colour(g.n, 0);
    std::vector<std::vector<char>> nbr_colours(g.n);
    for (int v = 0; v < g.n; ++v) nbr_colours[v].assign(g.n + 2, 0);
    std::vector<int> saturation(g.n, 0);
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] != 0) continue;
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree[v] > g.degree[pick]))
                pick = v;
        }
        int c = 1;
        while (nbr_colours[pick][c]) ++c;
        colour[pick] = c;
        used = std::max(used, c);
        for (int w : g.nbrs[pick]) {
            if (!nbr_colours[w][c]) {
                nbr_colours[w][c] = 1;
                ++saturation[w];
            }
        }
    }
    return used;
}

}  // namespace

int chromatic_number_exact(const Graph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw SizeLimitError("graph has " + std::to_string(n) +
                             " vertices, above the exact-search limit of " +
                             std::to_string(vertex_limit) +
                             "; for Kneser graphs use the closed form n - 2k + 2");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    const SearchGraph sg = build(g);
    const std::vector<int> clique = greedy_clique(sg, g);
    const int lower = static_cast<int>(clique.size());
    const int upper = dsatur_greedy_colours(sg);

    for (int k = lower; k < upper; ++k)
        if (KColourSearch(sg, k, clique).run()) return k;
    return upper;
}

}  // namespace bufcol
