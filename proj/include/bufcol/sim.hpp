#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bufcol/graph.hpp"

namespace bufcol {

/// Which graph a trial runs on. Parsed from "crown:<n>", "kneser:<n>,<k>"
/// or "file:<path>".
struct GraphSpec {
    enum class Kind { Crown, Kneser, File };
    Kind kind = Kind::Crown;
    int n = 0;
    int k = 0;
    std::string path;
};

GraphSpec parse_graph_spec(const std::string& text);
Graph build_graph(const GraphSpec& spec);

/// How arrival orders are produced: a fresh uniform permutation per
/// repetition, one of the crown presentation orders, or an explicit
/// permutation (stored 0-based).
struct OrderPolicy {
    enum class Kind { Random, Linear, Alternate, Explicit };
    Kind kind = Kind::Random;
    ArrivalOrder explicit_order;
};

/// Parses "random", "linear", "alternate" or a comma-separated 1-based
/// vertex list such as "8,1,5,7,6,2,10,4,3,9".
OrderPolicy parse_order_policy(const std::string& text);

/// Resolves the policy against a graph. Linear and alternate are the crown
/// presentation orders when the spec is a crown; linear falls back to the
/// identity order for other graphs, alternate is rejected for them.
ArrivalOrder resolve_order(const GraphSpec& spec, const OrderPolicy& policy, const Graph& g,
                           std::uint64_t order_seed);

struct TrialConfig {
    GraphSpec graph;
    OrderPolicy order;
    int b = 1;
    int repetitions = 20000;
    std::uint64_t master_seed = 0;
};

struct SimulationReport {
    double mean = 0.0;
    double std_error = 0.0;
    std::map<int, std::int64_t> empirical_pmf;  ///< colour count -> frequency
    int min_colours = 0;
    int max_colours = 0;
    int repetitions = 0;
    std::uint64_t master_seed = 0;

    bool operator==(const SimulationReport&) const = default;
};

/// Runs `repetitions` independent colourings. Repetition i derives its order
/// seed and colouring seed from (master_seed, i) with the pinned splitmix64
/// mixing, and results are aggregated with exact integer sums, so the report
/// is identical for any worker count. `workers` <= 0 picks the hardware
/// concurrency.
SimulationReport run_trials(const TrialConfig& config, int workers = 0);

/// One cell of a simulation grid.
struct TableCell {
    int n = 0;
    std::optional<int> k;
    int b = 0;
    double mean = 0.0;
    double std_error = 0.0;
    int min_colours = 0;
    int max_colours = 0;
    int repetitions = 0;
    std::uint64_t master_seed = 0;
};

/// Mean colour counts for crown graphs under uniformly random arrival
/// orders, over a grid of sizes and buffer capacities.
std::vector<TableCell> crown_table(const std::vector<int>& n_list, const std::vector<int>& b_list,
                                   int repetitions, std::uint64_t seed, int workers = 0);
const std::vector<int>& default_crown_sizes();        // {4, 6, 10, 20, 50, 100}
const std::vector<std::pair<int, int>>& default_kneser_cells();

/// The Kneser counterpart over (n, k) cells.
std::vector<TableCell> kneser_table(const std::vector<std::pair<int, int>>& nk_list,
                                    const std::vector<int>& b_list, int repetitions,
                                    std::uint64_t seed, int workers = 0);

std::string table_to_csv(const std::vector<TableCell>& cells, bool with_k);
std::string table_to_json_lines(const std::vector<TableCell>& cells, bool with_k);

/// Buffer-size scan for Kneser graphs: estimates the mean colour count for
/// each b in 2..b_max (all estimates share the master seed, so b = 2 has gap
/// exactly 0) and reports the first b whose normalised improvement
/// (mean(2) - mean(b)) / (n - 2k + 2) exceeds delta, if any.
struct DeltaScanResult {
    std::optional<int> smallest_b;
    std::map<int, double> means;  ///< b -> estimated mean colour count
    std::map<int, double> gaps;   ///< b -> normalised gap against b = 2
    int chi = 0;
};

DeltaScanResult delta_scan(int n, int k, int b_max, double delta, int repetitions,
                           std::uint64_t seed, int workers = 0);

}  // namespace bufcol
