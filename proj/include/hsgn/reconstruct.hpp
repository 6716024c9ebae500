#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hsgn/graph.hpp"
#include "hsgn/hop.hpp"

namespace hsgn {

// Sentinel threshold: proximity edges disabled (no finite ratio qualifies).
inline constexpr double kEpsilonDisabled = std::numeric_limits<double>::infinity();

struct ReconstructionPass {
    std::size_t edges_before = 0;
    std::size_t edges_added = 0;
    std::size_t edges_after = 0;
};

// Outcome of the iterative enhancement: per-pass edge counts plus the final
// enhanced graph. Edges are only ever added, never removed, and the result
// stays symmetric, binary and self-loop-free.
struct ReconstructionReport {
    std::vector<ReconstructionPass> passes;
    Graph final_graph;
};

// One enhancement pass: keep every existing edge and add every non-adjacent
// pair whose proximity ratio reaches epsilon. Node indexing is preserved.
// epsilon must exceed 1 (ratios at or below 1 mean at-or-below independence);
// kEpsilonDisabled is accepted and adds nothing.
std::pair<Graph, std::size_t> reconstruct_once(
    const Graph& graph, int max_order, double epsilon,
    std::uint64_t budget_limit = kDefaultEnumerationBudget);

// Runs reconstruct_once for `passes` rounds (1..6), recomputing the proximity
// table on each intermediate graph so that added edges feed later passes.
// Once a pass adds nothing the map has reached a fixed point and the
// remaining rounds are recorded as zero additions without re-enumerating.
ReconstructionReport reconstruct_iterative(
    const Graph& graph, int max_order, double epsilon, int passes,
    std::uint64_t budget_limit = kDefaultEnumerationBudget);

} // namespace hsgn
