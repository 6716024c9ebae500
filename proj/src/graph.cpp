#include "hsgn/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hsgn/errors.hpp"

namespace hsgn {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(std::move(token));
    return tokens;
}

bool is_comment(const std::string& line) {
    for (const char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return false;
}

} // namespace

Graph Graph::load_edge_list(std::istream& in) {
    Graph g;
    auto intern = [&g](const std::string& id) -> NodeId {
        const auto [it, inserted] = g.index_.try_emplace(id, NodeId(g.ids_.size()));
        if (inserted) {
            g.ids_.push_back(id);
            g.adjacency_.emplace_back();
        }
        return it->second;
    };

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        const auto tokens = tokenize(line);
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two node identifiers, got " +
                                          std::to_string(tokens.size()));
        const NodeId a = intern(tokens[0]);
        const NodeId b = intern(tokens[1]);
        if (a == b) continue; // self-loop line: node kept, edge dropped
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (edges.empty()) throw DataError("edge list holds no edges");
    g.attach_edges(std::move(edges));
    return g;
}

Graph Graph::from_edges(std::vector<std::string> node_ids,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.ids_ = std::move(node_ids);
    g.adjacency_.resize(g.ids_.size());
    g.index_.reserve(g.ids_.size());
    for (NodeId v = 0; v < NodeId(g.ids_.size()); ++v) {
        if (!g.index_.emplace(g.ids_[v], v).second)
            throw std::invalid_argument("duplicate node identifier: " + g.ids_[v]);
    }
    const auto n = NodeId(g.ids_.size());
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("self-loop rejected at node " + g.ids_[a]);
        if (a > b) std::swap(a, b);
    }
    g.attach_edges(std::move(edges));
    return g;
}

void Graph::attach_edges(std::vector<std::pair<NodeId, NodeId>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [a, b] : edges) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    edge_count_ = edges.size();
}

bool Graph::has_edge(NodeId i, NodeId j) const {
    if (i == j) return false;
    const auto& nbrs = adjacency_[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::optional<NodeId> Graph::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Graph::degree_vector() const {
    std::vector<int> degrees(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
        degrees[v] = int(adjacency_[v].size());
    return degrees;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId v = 0; v < NodeId(adjacency_.size()); ++v)
        for (const NodeId w : adjacency_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

void Graph::write_edge_list(std::ostream& out) const {
    for (const auto& [a, b] : edges())
        out << ids_[a] << ' ' << ids_[b] << '\n';
}

GroundTruth GroundTruth::load(std::istream& in, const Graph& graph) {
    GroundTruth truth;
    truth.labels.assign(graph.node_count(), -1);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const int community = truth.k_true++;
        for (const auto& token : tokens) {
            const auto index = graph.index_of(token);
            if (!index)
                throw ParseError(line_no, "unknown node identifier '" + token + "'");
            int& label = truth.labels[*index];
            if (label == -1)
                label = community;
            else if (label != community)
                ++truth.duplicate_assignments; // first assignment wins
        }
    }
    std::string missing;
    int missing_count = 0;
    for (NodeId v = 0; v < NodeId(graph.node_count()); ++v) {
        if (truth.labels[v] != -1) continue;
        ++missing_count;
        if (missing_count <= 10) {
            if (!missing.empty()) missing += ", ";
            missing += graph.node_id(v);
        }
    }
    if (missing_count > 0) {
        if (missing_count > 10) missing += ", ...";
        throw DataError("nodes missing from every community (" +
                        std::to_string(missing_count) + "): " + missing);
    }
    return truth;
}

} // namespace hsgn
