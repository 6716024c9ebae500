#include "hsgn/hop.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hsgn/errors.hpp"

namespace hsgn {
namespace {

void extend_paths(const Graph& g, NodeId start, NodeId at, int depth_left,
                  std::vector<char>& on_path, OrderPairCounts& out,
                  EnumerationBudget& budget) {
    for (const NodeId next : g.neighbors(at)) {
        if (on_path[next]) continue;
        if (++budget.used > budget.limit)
            throw DataError("path enumeration budget exceeded (" +
                            std::to_string(budget.limit) +
                            " extensions); graph too dense for order " +
                            std::to_string(out.order));
        if (depth_left == 1) {
            out.total += 1;
            out.per_node[start] += 1;
            out.per_node[next] += 1;
            out.per_pair[pair_key(start, next)] += 1;
        } else {
            on_path[next] = 1;
            extend_paths(g, start, next, depth_left - 1, on_path, out, budget);
            on_path[next] = 0;
        }
    }
}

} // namespace

OrderPairCounts enumerate_order_pairs(const Graph& graph, int order,
                                      EnumerationBudget& budget) {
    if (order < 1) throw std::invalid_argument("path order must be at least 1");
    if (graph.node_count() == 0) throw std::invalid_argument("graph has no nodes");
    OrderPairCounts out;
    out.order = order;
    out.per_node.assign(graph.node_count(), 0);
    std::vector<char> on_path(graph.node_count(), 0);
    for (NodeId start = 0; start < NodeId(graph.node_count()); ++start) {
        on_path[start] = 1;
        extend_paths(graph, start, start, order, on_path, out, budget);
        on_path[start] = 0;
    }
    return out;
}

OrderPairCounts enumerate_order_pairs(const Graph& graph, int order) {
    EnumerationBudget budget;
    return enumerate_order_pairs(graph, order, budget);
}

double hop_ratio(std::span<const OrderPairCounts> counts, NodeId i, NodeId j) {
    double joint = 0.0;
    double p_i = 0.0;
    double p_j = 0.0;
    for (const OrderPairCounts& c : counts) {
        if (c.total == 0) continue; // order above the diameter: no terms
        const double denom = double(c.order) * double(c.total);
        p_i += double(c.per_node[i]) / denom;
        p_j += double(c.per_node[j]) / denom;
        if (const auto it = c.per_pair.find(pair_key(i, j)); it != c.per_pair.end())
            joint += double(it->second) / denom;
    }
    if (joint == 0.0) return 0.0;
    return joint / (p_i * p_j); // joint > 0 forces both marginals > 0
}

HopTable HopTable::build(const Graph& graph, int max_order,
                         std::uint64_t budget_limit) {
    if (max_order < 1 || max_order > kMaxOrder)
        throw std::invalid_argument("max order must lie in [1, " +
                                    std::to_string(kMaxOrder) + "]");
    EnumerationBudget budget{budget_limit, 0};
    std::vector<double> marginal(graph.node_count(), 0.0);
    std::unordered_map<std::uint64_t, double> joint;
    for (int k = 1; k <= max_order; ++k) {
        const OrderPairCounts counts = enumerate_order_pairs(graph, k, budget);
        if (counts.total == 0) continue;
        const double denom = double(k) * double(counts.total);
        for (std::size_t v = 0; v < marginal.size(); ++v)
            marginal[v] += double(counts.per_node[v]) / denom;
        for (const auto& [key, count] : counts.per_pair)
            joint[key] += double(count) / denom;
    }
    HopTable table;
    table.max_order_ = max_order;
    table.entries_.reserve(joint.size());
    for (const auto& [key, p_pair] : joint) {
        const double p_marginals = marginal[pair_first(key)] * marginal[pair_second(key)];
        table.entries_.emplace_back(key, p_pair / p_marginals);
    }
    std::sort(table.entries_.begin(), table.entries_.end());
    return table;
}

double HopTable::ratio(NodeId i, NodeId j) const {
    const std::uint64_t key = pair_key(i, j);
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    if (it == entries_.end() || it->first != key) return 0.0;
    return it->second;
}

void HopTable::dump(std::ostream& out, const Graph& graph) const {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(9);
    for (const auto& [key, value] : entries_)
        out << graph.node_id(pair_first(key)) << ' '
            << graph.node_id(pair_second(key)) << ' ' << value << '\n';
    out.flags(flags);
    out.precision(precision);
}

} // namespace hsgn
