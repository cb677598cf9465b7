#include "bufcol/colouring.hpp"

#include <unordered_set>

namespace bufcol {

int colours_used(const Colouring& c) {
    std::unordered_set<int> distinct;
    for (int col : c.colour)
        if (col > 0) distinct.insert(col);
    return static_cast<int>(distinct.size());
}

Colouring first_fit(const Graph& g, const ArrivalOrder& order) {
    require_permutation(g, order);
    const int n = g.vertex_count();
    Colouring result{std::vector<int>(n, 0), 0};
    std::vector<char> blocked;
    for (int v : order) {
        // First Fit never exceeds degree+1, so larger neighbour colours
        // cannot influence the choice.
        const int bound = g.degree(v) + 1;
        blocked.assign(bound + 1, 0);
        for (int w : g.neighbours(v)) {
            const int c = result.colour[w];
            if (c > 0 && c <= bound) blocked[c] = 1;
        }
        int c = 1;
        while (blocked[c]) ++c;
        result.colour[v] = c;
    }
    result.count = colours_used(result);
    return result;
}

bool is_proper(const Graph& g, const Colouring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.colour.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        if (c.colour[v] <= 0) return false;
        for (int w : g.neighbours(v))
            if (c.colour[v] == c.colour[w]) return false;
    }
    return true;
}

}  // namespace bufcol
