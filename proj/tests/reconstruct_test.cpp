#include <doctest.h>

#include <random>
#include <set>

#include "hsgn/reconstruct.hpp"
#include "oracles.hpp"

using hsgn::Graph;
using hsgn::kEpsilonDisabled;
using hsgn::NodeId;
using hsgn::reconstruct_iterative;
using hsgn::reconstruct_once;
using hsgn::ReconstructionReport;

namespace {

const Graph kPath = oracle::from_pairs(3, {{0, 1}, {1, 2}});
const Graph kTrianglePlusPath =
    oracle::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});

std::set<std::pair<NodeId, NodeId>> edge_set(const Graph& g) {
    const auto e = g.edges();
    return {e.begin(), e.end()};
}

// Reference for one pass: every non-adjacent pair whose materialized-path
// ratio reaches epsilon.
std::set<std::pair<NodeId, NodeId>> expected_additions(const Graph& g, int r,
                                                       double epsilon) {
    std::set<std::pair<NodeId, NodeId>> out;
    for (int i = 0; i < int(g.node_count()); ++i)
        for (int j = i + 1; j < int(g.node_count()); ++j) {
            if (g.has_edge(NodeId(i), NodeId(j))) continue;
            if (oracle::hop_ratio_reference(g, r, i, j) >= epsilon)
                out.emplace(NodeId(i), NodeId(j));
        }
    return out;
}

} // namespace

TEST_SUITE("reconstruct") {

TEST_CASE("disabled threshold returns the input unchanged") {
    const auto [out, added] = reconstruct_once(kTrianglePlusPath, 2, kEpsilonDisabled);
    CHECK(added == 0);
    CHECK(edge_set(out) == edge_set(kTrianglePlusPath));
}

TEST_CASE("path ratio below the threshold adds nothing") {
    const auto [out, added] = reconstruct_once(kPath, 2, 2.0);
    CHECK(added == 0);
    CHECK(edge_set(out) == edge_set(kPath));
}

TEST_CASE("triangle plus path gains its closing edge at epsilon 1.1") {
    const auto [out, added] = reconstruct_once(kTrianglePlusPath, 2, 1.1);
    CHECK(added == 1);
    CHECK(out.has_edge(3, 5)); // ratio ~1.1834 >= 1.1
    CHECK(out.edge_count() == kTrianglePlusPath.edge_count() + 1);

    const auto [unchanged, none] = reconstruct_once(kTrianglePlusPath, 2, 2.0);
    CHECK(none == 0);
    CHECK(!unchanged.has_edge(3, 5));
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(reconstruct_once(kPath, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_once(kPath, 2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_iterative(kPath, 2, 2.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_iterative(kPath, 2, 2.0, 7), std::invalid_argument);
}

TEST_CASE("fixed point: all passes report zero additions") {
    const ReconstructionReport rep = reconstruct_iterative(kPath, 2, 2.0, 4);
    CHECK(rep.passes.size() == 4);
    for (const auto& pass : rep.passes) {
        CHECK(pass.edges_added == 0);
        CHECK(pass.edges_before == kPath.edge_count());
        CHECK(pass.edges_after == kPath.edge_count());
    }
    CHECK(edge_set(rep.final_graph) == edge_set(kPath));
}

TEST_CASE("one pass equals reconstruct_once") {
    const ReconstructionReport rep = reconstruct_iterative(kTrianglePlusPath, 2, 1.1, 1);
    const auto [once, added] = reconstruct_once(kTrianglePlusPath, 2, 1.1);
    CHECK(rep.passes.size() == 1);
    CHECK(rep.passes[0].edges_added == added);
    CHECK(edge_set(rep.final_graph) == edge_set(once));
}

TEST_CASE("second pass recomputes counts on the enhanced graph") {
    const ReconstructionReport rep = reconstruct_iterative(kTrianglePlusPath, 2, 1.1, 2);
    REQUIRE(rep.passes.size() == 2);
    CHECK(rep.passes[0].edges_added == 1);
    // oracle re-run on the pass-1 output decides pass 2
    const auto [pass1, added1] = reconstruct_once(kTrianglePlusPath, 2, 1.1);
    CHECK(added1 == 1);
    const auto expected = expected_additions(pass1, 2, 1.1);
    CHECK(rep.passes[1].edges_added == expected.size());
    for (const auto& [i, j] : expected) CHECK(rep.final_graph.has_edge(i, j));
}

TEST_CASE("passes match the oracle on random graphs") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = oracle::random_graph(rng, 4 + int(rng() % 5), 0.3);
        const double epsilon = 1.05 + oracle::unit_draw(rng);
        const auto expected = expected_additions(g, 2, epsilon);
        const auto [out, added] = reconstruct_once(g, 2, epsilon);
        CHECK(added == expected.size());
        for (const auto& [i, j] : expected) CHECK(out.has_edge(i, j));
    }
}

TEST_CASE("monotone growth and fixed-point persistence") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(rng, 4 + int(rng() % 8), 0.3);
        const double epsilon = trial % 2 == 0 ? 1.1 : 1.5;
        const ReconstructionReport rep = reconstruct_iterative(g, 2, epsilon, 4);
        const auto original = edge_set(g);
        const auto final_edges = edge_set(rep.final_graph);
        for (const auto& e : original) CHECK(final_edges.count(e) == 1);
        bool saw_zero = false;
        std::size_t previous = g.edge_count();
        for (const auto& pass : rep.passes) {
            CHECK(pass.edges_before == previous);
            CHECK(pass.edges_after == pass.edges_before + pass.edges_added);
            if (saw_zero) CHECK(pass.edges_added == 0);
            if (pass.edges_added == 0) saw_zero = true;
            previous = pass.edges_after;
        }
        CHECK(previous == rep.final_graph.edge_count());
    }
}

TEST_CASE("deterministic output") {
    std::mt19937_64 rng(61);
    const Graph g = oracle::random_graph_nonempty(rng, 9, 0.25);
    const ReconstructionReport a = reconstruct_iterative(g, 3, 1.2, 3);
    const ReconstructionReport b = reconstruct_iterative(g, 3, 1.2, 3);
    CHECK(edge_set(a.final_graph) == edge_set(b.final_graph));
    REQUIRE(a.passes.size() == b.passes.size());
    for (std::size_t p = 0; p < a.passes.size(); ++p)
        CHECK(a.passes[p].edges_added == b.passes[p].edges_added);
}

TEST_CASE("node identifiers survive enhancement") {
    const auto [out, added] = reconstruct_once(kTrianglePlusPath, 2, 1.1);
    REQUIRE(added == 1);
    CHECK(out.node_ids() == kTrianglePlusPath.node_ids());
}

} // TEST_SUITE
