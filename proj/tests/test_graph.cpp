#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "seqgraph/graph.hpp"
#include "seqgraph/json_io.hpp"
#include "seqgraph/sequence.hpp"

using namespace seqgraph;

namespace {

SortedSequence golden_prefix(int n) {
    return kronecker_prefix({ThetaSpec::golden(), 128}, n);
}

std::vector<int> cpi_visit_order(const SequenceGraph& g) {
    std::vector<int> order;
    for (const auto& e : g.cpi_edges) order.push_back(e.u);
    return order;
}

MultiGraph triangle() {
    MultiGraph g;
    g.vertices = {0, 1, 2};
    g.edges = {{0, 0, 1, Cycle::C1, 0}, {1, 1, 2, Cycle::C1, 1}, {2, 2, 0, Cycle::C1, 2}};
    g.next_id = 3;
    return g;
}

} // namespace

TEST(BuildGraph, KroneckerGoldenN8) {
    auto g = build_graph(golden_prefix(8));
    EXPECT_EQ(cpi_visit_order(g), (std::vector<int>{0, 5, 2, 7, 4, 1, 6, 3}));
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(g.c1_edges[i].u, i);
        EXPECT_EQ(g.c1_edges[i].v, (i + 1) % 8);
    }
}

TEST(BuildGraph, VdcBinaryN8) {
    auto g = build_graph(vdc_prefix(2, 8));
    EXPECT_EQ(cpi_visit_order(g), (std::vector<int>{0, 4, 2, 6, 1, 5, 3, 7}));
}

TEST(BuildGraph, TwoVerticesAllParallel) {
    auto g = build_graph(vdc_prefix(2, 2));
    auto mg = MultiGraph::from_sequence_graph(g);
    EXPECT_EQ(mg.edges.size(), 4u);
    for (const auto& e : mg.edges)
        EXPECT_TRUE((e.u == 0 && e.v == 1) || (e.u == 1 && e.v == 0));
    EXPECT_EQ(mg.degree(0), 4);
    EXPECT_EQ(mg.degree(1), 4);
}

TEST(BuildGraph, SingleVertexLoops) {
    auto g = build_graph(vdc_prefix(2, 1));
    auto mg = MultiGraph::from_sequence_graph(g);
    EXPECT_EQ(mg.edges.size(), 2u);
    EXPECT_EQ(mg.degree(0), 4); // two loops
}

TEST(BuildGraph, AlwaysFourRegularWithTwoNEdges) {
    for (int n : {1, 2, 3, 8, 17, 64}) {
        auto mg = MultiGraph::from_sequence_graph(build_graph(golden_prefix(n)));
        EXPECT_EQ(static_cast<int>(mg.edges.size()), 2 * n);
        for (int v = 0; v < n; ++v) EXPECT_EQ(mg.degree(v), 4) << "N=" << n << " v=" << v;
    }
}

TEST(DeleteEdge, LastC1EdgeDropsDegrees) {
    auto g = build_graph(golden_prefix(8));
    auto mg = MultiGraph::from_sequence_graph(g);
    auto out = delete_edge(mg, 7); // C1 edge (7, 0)
    EXPECT_EQ(out.degree(7), 3);
    EXPECT_EQ(out.degree(0), 3);
    EXPECT_EQ(out.degree(1), 4);
    EXPECT_THROW(delete_edge(out, 7), NoSuchEdge);
}

TEST(DeleteEdge, RemovesExactlyThatEdge) {
    auto mg = MultiGraph::from_sequence_graph(build_graph(vdc_prefix(2, 4)));
    auto out = delete_edge(mg, 2);
    EXPECT_EQ(out.edges.size(), mg.edges.size() - 1);
    for (const auto& e : out.edges) EXPECT_NE(e.id, 2);
    // Putting the edge back restores the original multiset.
    out.edges.push_back(*mg.find_edge(2));
    EXPECT_TRUE(is_same_labeled_graph(out, mg));
}

TEST(DeleteEdge, DeletingAllC1LeavesCpiCycle) {
    const int n = 8;
    auto g = build_graph(vdc_prefix(2, n));
    auto mg = MultiGraph::from_sequence_graph(g);
    for (int i = 0; i < n; ++i) mg = delete_edge(mg, i);
    EXPECT_EQ(static_cast<int>(mg.edges.size()), n);
    for (int v = 0; v < n; ++v) EXPECT_EQ(mg.degree(v), 2);
    EXPECT_TRUE(is_connected(mg));
    for (const auto& e : mg.edges) EXPECT_EQ(e.cycle, Cycle::Cpi);
}

TEST(ContractEdge, PathBecomesShorterPath) {
    MultiGraph g;
    g.vertices = {0, 1, 2};
    g.edges = {{0, 0, 1, Cycle::C1, 0}, {1, 1, 2, Cycle::C1, 1}};
    g.next_id = 2;
    auto out = contract_edge(g, 0);
    EXPECT_EQ(out.vertices, (std::set<int>{0, 2}));
    ASSERT_EQ(out.edges.size(), 1u);
    EXPECT_EQ(std::min(out.edges[0].u, out.edges[0].v), 0);
    EXPECT_EQ(std::max(out.edges[0].u, out.edges[0].v), 2);
}

TEST(ContractEdge, TriangleGivesParallelPair) {
    auto out = contract_edge(triangle(), 0);
    EXPECT_EQ(out.vertices, (std::set<int>{0, 2}));
    ASSERT_EQ(out.edges.size(), 2u);
    for (const auto& e : out.edges)
        EXPECT_TRUE((e.u == 0 && e.v == 2) || (e.u == 2 && e.v == 0));
}

TEST(ContractEdge, ParallelCopyLoopsAreDropped) {
    MultiGraph g;
    g.vertices = {0, 1};
    g.edges = {{0, 0, 1, Cycle::C1, 0}, {1, 1, 0, Cycle::C1, 1}, {2, 0, 1, Cycle::Cpi, 0}};
    g.next_id = 3;
    auto out = contract_edge(g, 0);
    EXPECT_EQ(out.vertices, (std::set<int>{0}));
    EXPECT_TRUE(out.edges.empty()); // both parallel copies would be loops
}

TEST(ContractEdge, Errors) {
    MultiGraph g;
    g.vertices = {0};
    g.edges = {{0, 0, 0, Cycle::C1, 0}};
    g.next_id = 1;
    EXPECT_THROW(contract_edge(g, 0), LoopContraction);
    EXPECT_THROW(contract_edge(g, 5), NoSuchEdge);
}

TEST(MinorReduce, VdcEightToFour) {
    auto red = minor_reduce(build_graph(vdc_prefix(2, 8)), 4);
    auto expect = g_prime(build_graph(vdc_prefix(2, 4)));
    EXPECT_TRUE(is_same_labeled_graph(red, expect));
    EXPECT_EQ(red.vertices, (std::set<int>{0, 1, 2, 3}));
}

TEST(MinorReduce, KroneckerThirteenToEight) {
    auto red = minor_reduce(build_graph(golden_prefix(13)), 8);
    auto expect = g_prime(build_graph(golden_prefix(8)));
    EXPECT_TRUE(is_same_labeled_graph(red, expect));
}

TEST(MinorReduce, SingleStepAndBounds) {
    auto g = build_graph(vdc_prefix(2, 8));
    EXPECT_THROW(minor_reduce(g, 8), InvalidRange);
    EXPECT_THROW(minor_reduce(g, 9), InvalidRange);
    auto red = minor_reduce(g, 7);
    EXPECT_TRUE(is_same_labeled_graph(red, g_prime(build_graph(vdc_prefix(2, 7)))));
}

TEST(MinorReduce, TraceRecordsDeletionsAndDegreeTwoContractions) {
    auto red = minor_reduce_trace(build_graph(vdc_prefix(2, 8)), 4);
    // C1 edges (3,4), (4,5), (5,6), (6,7), (7,0) go first.
    ASSERT_EQ(red.deleted_edges.size(), 5u);
    EXPECT_EQ(red.deleted_edges.front().u, 3);
    EXPECT_EQ(red.deleted_edges.back().u, 7);
    EXPECT_EQ(red.deleted_edges.back().v, 0);
    ASSERT_EQ(red.contractions.size(), 4u);
    EXPECT_EQ(red.contractions[0].vertex, 7);
    EXPECT_EQ(red.contractions[3].vertex, 4);
    for (const auto& c : red.contractions) EXPECT_LT(c.kept, c.vertex);
}

TEST(IsSameLabeledGraph, Examples) {
    auto g8 = build_graph(vdc_prefix(2, 8));
    auto mg = MultiGraph::from_sequence_graph(g8);
    EXPECT_TRUE(is_same_labeled_graph(mg, mg));
    EXPECT_FALSE(is_same_labeled_graph(mg, g_prime(g8))); // edge counts differ by 1
    auto different_labels = minor_reduce(g8, 4);
    EXPECT_FALSE(is_same_labeled_graph(mg, different_labels));
}

TEST(GraphJson, RoundTrip) {
    for (int n : {1, 2, 8}) {
        auto g = build_graph(vdc_prefix(2, n));
        auto back = sequence_graph_from_json(to_json(g));
        EXPECT_TRUE(g == back) << "N=" << n;
    }
    auto g = build_graph(golden_prefix(13));
    EXPECT_TRUE(g == sequence_graph_from_json(to_json(g)));
}

TEST(GraphJson, RejectsMalformed) {
    auto g = build_graph(vdc_prefix(2, 4));
    json j = to_json(g);
    json bad = j;
    bad["edges"][0]["v"] = 3; // C1 edge (0,1) tampered
    EXPECT_THROW(sequence_graph_from_json(bad), ParseError);
    bad = j;
    bad["edges"][5]["u"] = 0; // Cpi no longer a permutation chain
    EXPECT_THROW(sequence_graph_from_json(bad), ParseError);
    EXPECT_THROW(sequence_graph_from_json(json{{"n", 2}}), ParseError);
}

TEST(Connectivity, DetectsDisconnection) {
    auto mg = MultiGraph::from_sequence_graph(build_graph(vdc_prefix(2, 8)));
    EXPECT_TRUE(is_connected(mg));
    MultiGraph two;
    two.vertices = {0, 1};
    EXPECT_FALSE(is_connected(two));
}
