#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hsgn/graph.hpp"

namespace hsgn {

// Canonical key for an unordered node pair: smaller index in the high word.
inline std::uint64_t pair_key(NodeId i, NodeId j) {
    const auto lo = std::uint32_t(std::min(i, j));
    const auto hi = std::uint32_t(std::max(i, j));
    return (std::uint64_t(lo) << 32) | hi;
}
inline NodeId pair_first(std::uint64_t key) { return NodeId(key >> 32); }
inline NodeId pair_second(std::uint64_t key) { return NodeId(key & 0xffffffffu); }

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Shared extension counter for bounded-depth path enumeration. Simple-path
// counting is exponential on dense graphs, so each appended node is charged
// here and enumeration aborts with DataError once the limit is hit.
struct EnumerationBudget {
    std::uint64_t limit = kDefaultEnumerationBudget;
    std::uint64_t used = 0;
};

// Endpoint statistics of the order-k node pairs: the ordered endpoint pairs
// (start, end) of every simple path (no repeated node) of length exactly k,
// enumerated from every start node. A pair's appearance count therefore
// covers both traversal directions; for k = 1 the total is 2m and every edge
// {i, j} counts twice. Interior path nodes contribute to no count.
struct OrderPairCounts {
    int order = 0;
    std::uint64_t total = 0;                                   // number of ordered pairs
    std::vector<std::uint64_t> per_node;                       // endpoint slots per node
    std::unordered_map<std::uint64_t, std::uint64_t> per_pair; // per unordered pair
};

OrderPairCounts enumerate_order_pairs(const Graph& graph, int order,
                                      EnumerationBudget& budget);
OrderPairCounts enumerate_order_pairs(const Graph& graph, int order);

// Weighted-PMI proximity of a node pair: the ratio p(v_i,v_j) / (p(v_i) p(v_j))
// where each probability sums the order-k counts normalized by k * |H_k|
// (order-k terms decay with weight 1/k). Orders with no paths contribute
// nothing. Returns 0 for pairs that never co-occur (log-ratio -inf, "never
// add"); downstream thresholds compare this ratio directly, which keeps the
// logarithm base out of the picture.
double hop_ratio(std::span<const OrderPairCounts> counts, NodeId i, NodeId j);

// All pairwise proximity ratios of a graph over orders 1..r. Only pairs with
// a nonzero joint count are stored; everything else reads as ratio 0.
// Immutable once built.
class HopTable {
public:
    static constexpr int kMaxOrder = 6;

    static HopTable build(const Graph& graph, int max_order,
                          std::uint64_t budget_limit = kDefaultEnumerationBudget);

    int max_order() const { return max_order_; }
    double ratio(NodeId i, NodeId j) const;
    const std::vector<std::pair<std::uint64_t, double>>& entries() const {
        return entries_;
    }

    // Diagnostic text dump: "id_i id_j ratio" per stored pair, nine
    // significant digits.
    void dump(std::ostream& out, const Graph& graph) const;

private:
    int max_order_ = 0;
    std::vector<std::pair<std::uint64_t, double>> entries_; // sorted by key
};

} // namespace hsgn
