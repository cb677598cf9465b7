#include "bufcol/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bufcol/buffered.hpp"
#include "bufcol/colouring.hpp"

namespace bufcol {

Rational OutcomeDistribution::mean() const {
    Rational total = 0;
    for (const auto& [count, p] : pmf) total += Rational(count) * p;
    return total;
}

Rational OutcomeDistribution::probability(int colour_count) const {
    const auto it = pmf.find(colour_count);
    return it == pmf.end() ? Rational(0) : it->second;
}

OutcomeDistribution exact_outcome_distribution(const Graph& g, const ArrivalOrder& order,
                                               int b, std::uint64_t branch_cap) {
    if (b < 1) throw std::invalid_argument("buffer capacity must be at least 1");
    require_permutation(g, order);

    const int n = g.vertex_count();
    OutcomeDistribution dist;
    if (n == 0) {
        dist.pmf[0] = 1;
        dist.branches = 1;
        return dist;
    }

    std::vector<int> fixed(n, 0);
    fixed[order[0]] = 1;
    std::vector<int> queue;
    int next = 1;
    while (next < n && static_cast<int>(queue.size()) < b) queue.push_back(order[next++]);

    const std::function<void(const Rational&)> explore = [&](const Rational& weight) {
        if (queue.empty()) {
            if (++dist.branches > branch_cap) throw BranchCapExceeded(dist.branches, branch_cap);
            const int used = colours_used(Colouring{fixed, 0});
            dist.pmf[used] += weight;
            return;
        }
        const auto candidates = detail::minimal_assignments(g, fixed, queue);
        const Rational share = weight / Rational(static_cast<unsigned long>(candidates.size()));
        const int head = queue.front();
        queue.erase(queue.begin());
        const bool admitted = next < n;
        if (admitted) queue.push_back(order[next++]);
        for (const auto& assignment : candidates) {
            fixed[head] = assignment[0];
            explore(share);
        }
        fixed[head] = 0;
        if (admitted) {
            queue.pop_back();
            --next;
        }
        queue.insert(queue.begin(), head);
    };
    explore(Rational(1));

    // Exactness check: the branch weights must tile the whole probability.
    Rational total = 0;
    for (const auto& [count, p] : dist.pmf) total += p;
    if (total != 1) throw std::logic_error("branch weights do not sum to 1");
    return dist;
}

int worst_case_colours(const Graph& g, int b, int order_limit) {
    if (b < 1) throw std::invalid_argument("buffer capacity must be at least 1");
    const int n = g.vertex_count();
    if (n > order_limit)
        throw SizeLimitError("worst-case search over all orders is limited to " +
                             std::to_string(order_limit) + " vertices, graph has " +
                             std::to_string(n));
    if (n == 0) return 0;

    int best = 0;
    ArrivalOrder order(n);
    std::iota(order.begin(), order.end(), 0);

    // Maximum distinct-colour count over every random branch of one order.
    std::vector<int> fixed(n, 0);
    std::vector<int> queue;
    int next = 0;
    const std::function<int()> max_over_branches = [&]() -> int {
        if (queue.empty()) return colours_used(Colouring{fixed, 0});
        const auto candidates = detail::minimal_assignments(g, fixed, queue);
        const int head = queue.front();
        queue.erase(queue.begin());
        const bool admitted = next < n;
        if (admitted) queue.push_back(order[next++]);
        int worst = 0;
        for (const auto& assignment : candidates) {
            fixed[head] = assignment[0];
            worst = std::max(worst, max_over_branches());
        }
        fixed[head] = 0;
        if (admitted) {
            queue.pop_back();
            --next;
        }
        queue.insert(queue.begin(), head);
        return worst;
    };

    do {
        std::fill(fixed.begin(), fixed.end(), 0);
        fixed[order[0]] = 1;
        queue.clear();
        next = 1;
        while (next < n && static_cast<int>(queue.size()) < b) queue.push_back(order[next++]);
        best = std::max(best, max_over_branches());
        if (best == n) break;
    } while (std::next_permutation(order.begin(), order.end()));

    return best;
}

}  // namespace bufcol
