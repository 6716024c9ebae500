#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hsgn {

using NodeId = std::int32_t;

// Undirected, unweighted graph over externally-named nodes. External
// identifiers are opaque strings mapped to dense indices 0..n-1 in order of
// first appearance; all math downstream runs on the indices. Immutable after
// construction, so any number of readers can share one instance.
class Graph {
public:
    Graph() = default;

    // Parses SNAP-style edge lists: '#' comment lines, two whitespace-separated
    // identifiers per data line. Duplicate and reversed-duplicate edges
    // collapse to one; a self-loop line registers its node but adds no edge.
    // Malformed lines raise ParseError with the line number, a file without a
    // single edge raises DataError.
    static Graph load_edge_list(std::istream& in);

    // Builds a graph over the given identifiers (index i names node i). Edges
    // are internal index pairs; duplicates collapse, self-loops are rejected.
    // Nodes mentioned in no edge stay as isolated vertices.
    static Graph from_edges(std::vector<std::string> node_ids,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
    int degree(NodeId v) const { return int(adjacency_[v].size()); }
    bool has_edge(NodeId i, NodeId j) const;

    const std::string& node_id(NodeId v) const { return ids_[v]; }
    const std::vector<std::string>& node_ids() const { return ids_; }
    std::optional<NodeId> index_of(std::string_view id) const;

    // Entry v equals sum_j a_vj.
    std::vector<int> degree_vector() const;

    // Undirected edge set as (i, j) with i < j, lexicographically ordered.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    // Inverse of load_edge_list for graphs without isolated vertices (the
    // edge-list format cannot express a degree-zero node).
    void write_edge_list(std::ostream& out) const;

private:
    void attach_edges(std::vector<std::pair<NodeId, NodeId>> edges);

    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<NodeId>> adjacency_; // sorted neighbor lists
    std::size_t edge_count_ = 0;
};

// Disjoint ground-truth communities: labels[i] is the community of node i.
struct GroundTruth {
    std::vector<int> labels;
    int k_true = 0;
    // Nodes listed under more than one community keep their first assignment;
    // this counts the dropped repeats.
    int duplicate_assignments = 0;

    // Parses one community per line, whitespace-separated node identifiers
    // (SNAP -cmty convention); '#' comment lines and blank lines are skipped
    // and k_true counts the remaining lines. Unknown identifiers raise
    // ParseError; nodes missing from every community raise DataError.
    static GroundTruth load(std::istream& in, const Graph& graph);
};

} // namespace hsgn
