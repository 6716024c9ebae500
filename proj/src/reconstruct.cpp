#include "hsgn/reconstruct.hpp"

#include <stdexcept>

namespace hsgn {

std::pair<Graph, std::size_t> reconstruct_once(const Graph& graph, int max_order,
                                               double epsilon,
                                               std::uint64_t budget_limit) {
    if (!(epsilon > 1.0))
        throw std::invalid_argument("epsilon must exceed 1");
    const HopTable table = HopTable::build(graph, max_order, budget_limit);
    auto edges = graph.edges();
    std::size_t added = 0;
    for (const auto& [key, ratio] : table.entries()) {
        if (ratio < epsilon) continue;
        const NodeId i = pair_first(key);
        const NodeId j = pair_second(key);
        if (graph.has_edge(i, j)) continue;
        edges.emplace_back(i, j);
        ++added;
    }
    if (added == 0) return {graph, 0};
    return {Graph::from_edges(graph.node_ids(), std::move(edges)), added};
}

ReconstructionReport reconstruct_iterative(const Graph& graph, int max_order,
                                           double epsilon, int passes,
                                           std::uint64_t budget_limit) {
    if (passes < 1 || passes > 6)
        throw std::invalid_argument("pass count must lie in [1, 6]");
    ReconstructionReport report;
    report.final_graph = graph;
    bool fixed_point = false;
    for (int pass = 0; pass < passes; ++pass) {
        const std::size_t before = report.final_graph.edge_count();
        if (fixed_point) {
            report.passes.push_back({before, 0, before});
            continue;
        }
        auto [next, added] =
            reconstruct_once(report.final_graph, max_order, epsilon, budget_limit);
        report.passes.push_back({before, added, next.edge_count()});
        report.final_graph = std::move(next);
        fixed_point = (added == 0);
    }
    return report;
}

} // namespace hsgn
