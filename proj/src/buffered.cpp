#include "bufcol/buffered.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bufcol {

namespace {

std::vector<int> descending_key(std::vector<int> colours) {
    std::sort(colours.begin(), colours.end(), std::greater<int>());
    return colours;
}

}  // namespace

namespace detail {

std::vector<std::vector<int>> minimal_assignments(const Graph& g,
                                                  const std::vector<int>& fixed_colour,
                                                  const std::vector<int>& queue) {
    const int q = static_cast<int>(queue.size());
    int c_max = 0;
    for (int c : fixed_colour) c_max = std::max(c_max, c);
    const int limit = c_max + q;

    // Colours blocked at each queue position by fixed neighbours, and the
    // earlier queue positions each position must differ from.
    std::vector<std::vector<char>> blocked(q, std::vector<char>(limit + 1, 0));
    std::vector<std::vector<int>> earlier(q);
    for (int i = 0; i < q; ++i) {
        for (int w : g.neighbours(queue[i])) {
            const int c = fixed_colour[w];
            if (c > 0 && c <= limit) blocked[i][c] = 1;
        }
        for (int j = 0; j < i; ++j)
            if (g.adjacent(queue[i], queue[j])) earlier[i].push_back(j);
    }

    // A first-fit sweep of the queue is proper and stays within 1..limit;
    // its key is the initial bound for the search.
    std::vector<int> assignment(q, 0);
    for (int i = 0; i < q; ++i) {
        int c = 1;
        for (; c <= limit; ++c) {
            if (blocked[i][c]) continue;
            bool clash = false;
            for (int j : earlier[i])
                if (assignment[j] == c) {
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
        assignment[i] = c;
    }
    std::vector<int> best_key = descending_key(assignment);

    std::vector<std::vector<int>> results;
    std::fill(assignment.begin(), assignment.end(), 0);

    // Any completion of a partial assignment keys at least as high as the
    // partial colours padded with 1s, so such prefixes can be cut against
    // the best key found so far.
    const auto padded_beats_best = [&](int pos) {
        std::vector<int> key(assignment.begin(), assignment.begin() + pos);
        std::sort(key.begin(), key.end(), std::greater<int>());
        key.resize(q, 1);
        return key > best_key;
    };

    const std::function<void(int)> dfs = [&](int pos) {
        if (pos == q) {
            std::vector<int> key = descending_key(assignment);
            if (key < best_key) {
                best_key = std::move(key);
                results.clear();
                results.push_back(assignment);
            } else if (key == best_key) {
                results.push_back(assignment);
            }
            return;
        }
        for (int c = 1; c <= limit; ++c) {
            if (blocked[pos][c]) continue;
            bool clash = false;
            for (int j : earlier[pos])
                if (assignment[j] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            assignment[pos] = c;
            if (!padded_beats_best(pos + 1)) dfs(pos + 1);
            assignment[pos] = 0;
        }
    };
    dfs(0);
    return results;
}

}  // namespace detail

std::vector<CandidateColouring> enumerate_candidates(const Graph& g,
                                                     const std::vector<int>& fixed_colour,
                                                     const std::vector<int>& queue) {
    const int n = g.vertex_count();
    if (queue.empty()) throw std::invalid_argument("queue must be non-empty");
    if (static_cast<int>(fixed_colour.size()) != n)
        throw std::invalid_argument("fixed colouring must cover every vertex");

    std::vector<char> queued(n, 0);
    for (int v : queue) {
        if (v < 0 || v >= n) throw std::invalid_argument("queued vertex out of range");
        if (queued[v]) throw std::invalid_argument("queued vertices must be distinct");
        if (fixed_colour[v] != 0) throw std::invalid_argument("queued vertex already has a fixed colour");
        queued[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (fixed_colour[v] < 0) throw std::invalid_argument("fixed colours must be positive");
        if (fixed_colour[v] == 0) continue;
        for (int w : g.neighbours(v))
            if (fixed_colour[w] == fixed_colour[v])
                throw std::invalid_argument("fixed colouring is improper");
    }

    std::vector<CandidateColouring> candidates;
    for (auto& assignment : detail::minimal_assignments(g, fixed_colour, queue)) {
        CandidateColouring c;
        c.key = descending_key(assignment);
        c.assignment = std::move(assignment);
        candidates.push_back(std::move(c));
    }
    return candidates;
}

Colouring buffered_colouring(const Graph& g, const ArrivalOrder& order, int b,
                             RandomSource& rand) {
    if (b < 1) throw std::invalid_argument("buffer capacity must be at least 1");
    require_permutation(g, order);
    const int n = g.vertex_count();
    Colouring result{std::vector<int>(n, 0), 0};
    if (n == 0) return result;

    result.colour[order[0]] = 1;
    std::vector<int> queue;
    queue.reserve(b);
    int next = 1;
    while (next < n && static_cast<int>(queue.size()) < b) queue.push_back(order[next++]);

    while (!queue.empty()) {
        const auto candidates = detail::minimal_assignments(g, result.colour, queue);
        const std::size_t pick =
            candidates.size() == 1 ? 0 : rand.uniform_below(candidates.size());
        result.colour[queue.front()] = candidates[pick][0];
        queue.erase(queue.begin());
        if (next < n) queue.push_back(order[next++]);
    }

    result.count = colours_used(result);
    return result;
}

}  // namespace bufcol
