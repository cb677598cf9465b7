#include "bufcol/sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bufcol/analysis.hpp"
#include "bufcol/buffered.hpp"
#include "bufcol/rng.hpp"

namespace bufcol {

GraphSpec parse_graph_spec(const std::string& text) {
    GraphSpec spec;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec must look like crown:<n>, kneser:<n>,<k> or file:<path>");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);

    const auto parse_int = [&](const std::string& field) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("graph spec: '" + field + "' is not a number");
        }
        if (used != field.size())
            throw std::invalid_argument("graph spec: '" + field + "' is not a number");
        return value;
    };

    if (kind == "crown") {
        spec.kind = GraphSpec::Kind::Crown;
        spec.n = parse_int(rest);
    } else if (kind == "kneser") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("kneser spec must look like kneser:<n>,<k>");
        spec.kind = GraphSpec::Kind::Kneser;
        spec.n = parse_int(rest.substr(0, comma));
        spec.k = parse_int(rest.substr(comma + 1));
    } else if (kind == "file") {
        spec.kind = GraphSpec::Kind::File;
        spec.path = rest;
    } else {
        throw std::invalid_argument("unknown graph kind '" + kind + "'");
    }
    return spec;
}

Graph build_graph(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphSpec::Kind::Crown:
            return crown_graph(spec.n);
        case GraphSpec::Kind::Kneser:
            return kneser_graph(spec.n, spec.k);
        case GraphSpec::Kind::File: {
            std::ifstream in(spec.path);
            if (!in) throw std::invalid_argument("cannot open graph file '" + spec.path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return graph_from_edge_list(text.str());
        }
    }
    throw std::logic_error("unreachable graph kind");
}

OrderPolicy parse_order_policy(const std::string& text) {
    OrderPolicy policy;
    if (text == "random") {
        policy.kind = OrderPolicy::Kind::Random;
    } else if (text == "linear") {
        policy.kind = OrderPolicy::Kind::Linear;
    } else if (text == "alternate") {
        policy.kind = OrderPolicy::Kind::Alternate;
    } else {
        policy.kind = OrderPolicy::Kind::Explicit;
        std::stringstream fields(text);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(field, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("order '" + field + "' is not a vertex number");
            }
            if (used != field.size() || v < 1)
                throw std::invalid_argument("order vertices are 1-based positive numbers");
            policy.explicit_order.push_back(v - 1);
        }
        if (policy.explicit_order.empty())
            throw std::invalid_argument("order list must not be empty");
    }
    return policy;
}

ArrivalOrder resolve_order(const GraphSpec& spec, const OrderPolicy& policy, const Graph& g,
                           std::uint64_t order_seed) {
    switch (policy.kind) {
        case OrderPolicy::Kind::Random:
            return random_order(g, order_seed);
        case OrderPolicy::Kind::Linear:
            if (spec.kind == GraphSpec::Kind::Crown) return linear_order(spec.n);
            return linear_order_identity(g);
        case OrderPolicy::Kind::Alternate:
            if (spec.kind != GraphSpec::Kind::Crown)
                throw std::invalid_argument("alternate order is defined for crown graphs only");
            return alternate_order(spec.n);
        case OrderPolicy::Kind::Explicit:
            require_permutation(g, policy.explicit_order);
            return policy.explicit_order;
    }
    throw std::logic_error("unreachable order kind");
}

namespace {

struct Accumulator {
    std::map<int, std::int64_t> histogram;
    std::int64_t sum = 0;
    std::int64_t sum_squares = 0;
    int min_colours = 0;
    int max_colours = 0;
    bool any = false;

    void add(int count) {
        ++histogram[count];
        sum += count;
        sum_squares += static_cast<std::int64_t>(count) * count;
        if (!any) {
            min_colours = max_colours = count;
            any = true;
        } else {
            min_colours = std::min(min_colours, count);
            max_colours = std::max(max_colours, count);
        }
    }

    void merge(const Accumulator& other) {
        if (!other.any) return;
        for (const auto& [count, freq] : other.histogram) histogram[count] += freq;
        sum += other.sum;
        sum_squares += other.sum_squares;
        if (!any) {
            min_colours = other.min_colours;
            max_colours = other.max_colours;
            any = true;
        } else {
            min_colours = std::min(min_colours, other.min_colours);
            max_colours = std::max(max_colours, other.max_colours);
        }
    }
};

}  // namespace

SimulationReport run_trials(const TrialConfig& config, int workers) {
    if (config.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (config.b < 1) throw std::invalid_argument("buffer capacity must be at least 1");

    const Graph g = build_graph(config.graph);
    const bool random_orders = config.order.kind == OrderPolicy::Kind::Random;
    const ArrivalOrder shared_order =
        random_orders ? ArrivalOrder{} : resolve_order(config.graph, config.order, g, 0);

    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, config.repetitions);

    const auto run_range = [&](int lo, int hi, Accumulator& acc) {
        for (int rep = lo; rep < hi; ++rep) {
            const ArrivalOrder order =
                random_orders
                    ? random_order(g, derive_order_seed(config.master_seed, rep))
                    : shared_order;
            RandomSource rand(derive_colour_seed(config.master_seed, rep));
            const Colouring colouring = buffered_colouring(g, order, config.b, rand);
            acc.add(colouring.count);
        }
    };

    Accumulator total;
    if (workers == 1) {
        run_range(0, config.repetitions, total);
    } else {
        std::vector<Accumulator> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const int chunk = (config.repetitions + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(config.repetitions, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, partial[w]); });
        }
        for (auto& t : pool) t.join();
        for (const auto& acc : partial) total.merge(acc);
    }

    SimulationReport report;
    report.repetitions = config.repetitions;
    report.master_seed = config.master_seed;
    report.empirical_pmf = std::move(total.histogram);
    report.min_colours = total.min_colours;
    report.max_colours = total.max_colours;
    const double reps = static_cast<double>(config.repetitions);
    report.mean = static_cast<double>(total.sum) / reps;
    if (config.repetitions > 1) {
        const double variance =
            (static_cast<double>(total.sum_squares) - reps * report.mean * report.mean) /
            (reps - 1.0);
        report.std_error = std::sqrt(std::max(0.0, variance) / reps);
    }
    return report;
}

namespace {

std::uint64_t cell_seed(std::uint64_t seed, int n, int k, int b) {
    std::uint64_t s = seed;
    s = splitmix64(s ^ static_cast<std::uint64_t>(n));
    s = splitmix64(s ^ static_cast<std::uint64_t>(k));
    s = splitmix64(s ^ static_cast<std::uint64_t>(b));
    return s;
}

TableCell make_cell(const GraphSpec& spec, std::optional<int> k, int b, int repetitions,
                    std::uint64_t master, int workers) {
    TrialConfig config;
    config.graph = spec;
    config.order.kind = OrderPolicy::Kind::Random;
    config.b = b;
    config.repetitions = repetitions;
    config.master_seed = master;
    const SimulationReport report = run_trials(config, workers);

    TableCell cell;
    cell.n = spec.n;
    cell.k = k;
    cell.b = b;
    cell.mean = report.mean;
    cell.std_error = report.std_error;
    cell.min_colours = report.min_colours;
    cell.max_colours = report.max_colours;
    cell.repetitions = repetitions;
    cell.master_seed = master;
    return cell;
}

}  // namespace

const std::vector<int>& default_crown_sizes() {
    static const std::vector<int> sizes{4, 6, 10, 20, 50, 100};
    return sizes;
}

const std::vector<std::pair<int, int>>& default_kneser_cells() {
    static const std::vector<std::pair<int, int>> cells{
        {5, 2}, {6, 2}, {7, 2}, {8, 2}, {9, 2}, {10, 2},
        {7, 3}, {8, 3}, {9, 3}, {10, 3},
        {9, 4}, {10, 4},
    };
    return cells;
}

std::vector<TableCell> crown_table(const std::vector<int>& n_list, const std::vector<int>& b_list,
                                   int repetitions, std::uint64_t seed, int workers) {
    std::vector<TableCell> cells;
    for (int n : n_list)
        for (int b : b_list) {
            GraphSpec spec;
            spec.kind = GraphSpec::Kind::Crown;
            spec.n = n;
            cells.push_back(make_cell(spec, std::nullopt, b, repetitions,
                                      cell_seed(seed, n, 0, b), workers));
        }
    return cells;
}

std::vector<TableCell> kneser_table(const std::vector<std::pair<int, int>>& nk_list,
                                    const std::vector<int>& b_list, int repetitions,
                                    std::uint64_t seed, int workers) {
    std::vector<TableCell> cells;
    for (const auto& [n, k] : nk_list)
        for (int b : b_list) {
            GraphSpec spec;
            spec.kind = GraphSpec::Kind::Kneser;
            spec.n = n;
            spec.k = k;
            cells.push_back(make_cell(spec, k, b, repetitions, cell_seed(seed, n, k, b), workers));
        }
    return cells;
}

namespace {

std::string format_double(double value, int decimals) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(decimals);
    out << value;
    return out.str();
}

}  // namespace

std::string table_to_csv(const std::vector<TableCell>& cells, bool with_k) {
    std::ostringstream out;
    out << (with_k ? "n,k,b,mean,stderr,min,max,reps,seed\n" : "n,b,mean,stderr,min,max,reps,seed\n");
    for (const auto& cell : cells) {
        out << cell.n << ',';
        if (with_k) out << cell.k.value_or(0) << ',';
        out << cell.b << ',' << format_double(cell.mean, 4) << ','
            << format_double(cell.std_error, 5) << ',' << cell.min_colours << ','
            << cell.max_colours << ',' << cell.repetitions << ',' << cell.master_seed << '\n';
    }
    return out.str();
}

std::string table_to_json_lines(const std::vector<TableCell>& cells, bool with_k) {
    std::ostringstream out;
    for (const auto& cell : cells) {
        nlohmann::json record{
            {"n", cell.n},           {"b", cell.b},
            {"mean", cell.mean},     {"stderr", cell.std_error},
            {"min", cell.min_colours}, {"max", cell.max_colours},
            {"reps", cell.repetitions}, {"seed", cell.master_seed},
        };
        if (with_k) record["k"] = cell.k.value_or(0);
        out << record.dump() << '\n';
    }
    return out.str();
}

DeltaScanResult delta_scan(int n, int k, int b_max, double delta, int repetitions,
                           std::uint64_t seed, int workers) {
    if (2 * k > n)
        throw std::invalid_argument("delta scan requires n >= 2k so that the chromatic closed form applies");
    if (b_max < 2) throw std::invalid_argument("delta scan requires b_max >= 2");

    DeltaScanResult result;
    result.chi = kneser_chromatic(n, k);

    TrialConfig config;
    config.graph.kind = GraphSpec::Kind::Kneser;
    config.graph.n = n;
    config.graph.k = k;
    config.order.kind = OrderPolicy::Kind::Random;
    config.repetitions = repetitions;
    config.master_seed = seed;

    for (int b = 2; b <= b_max; ++b) {
        config.b = b;
        result.means[b] = run_trials(config, workers).mean;
        const double gap = (result.means.at(2) - result.means.at(b)) / result.chi;
        result.gaps[b] = gap;
        if (!result.smallest_b && gap > delta) result.smallest_b = b;
    }
    return result;
}

}  // namespace bufcol
