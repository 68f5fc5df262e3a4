#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqgraph/errors.hpp"
#include "seqgraph/sequence.hpp"

namespace seqgraph {

enum class Cycle { C1, Cpi };

inline const char* cycle_name(Cycle c) { return c == Cycle::C1 ? "C1" : "Cpi"; }

/// The N-th sequence graph: two labeled Hamiltonian cycles on {0..N-1}.
/// C1 edge i is (i, i+1 mod N); Cpi edge i is (pi(i), pi(i+1 mod N)).
struct SequenceGraph {
    struct Edge {
        int u, v;
        Cycle cycle;
        int index;
    };

    int n = 0;
    std::vector<int> pi; // defining sorted-order permutation
    std::vector<Edge> c1_edges;
    std::vector<Edge> cpi_edges;

    std::vector<Edge> all_edges() const {
        std::vector<Edge> e = c1_edges;
        e.insert(e.end(), cpi_edges.begin(), cpi_edges.end());
        return e;
    }

    friend bool operator==(const SequenceGraph& a, const SequenceGraph& b) {
        return a.n == b.n && a.pi == b.pi;
    }
};

inline SequenceGraph build_graph(const SortedSequence& seq) {
    SequenceGraph g;
    g.n = seq.size();
    g.pi = seq.pi;
    g.c1_edges.reserve(g.n);
    g.cpi_edges.reserve(g.n);
    for (int i = 0; i < g.n; ++i) {
        g.c1_edges.push_back({i, (i + 1) % g.n, Cycle::C1, i});
        g.cpi_edges.push_back({g.pi[i], g.pi[(i + 1) % g.n], Cycle::Cpi, i});
    }
    return g;
}

/// General multigraph with stable edge ids; target of deletions/contractions.
/// Parallel edges and loops are first-class.
struct MultiGraph {
    struct Edge {
        int id;
        int u, v;
        Cycle cycle;
        int index; // identity tag: index within its original cycle
    };

    std::set<int> vertices;
    std::vector<Edge> edges;
    int next_id = 0;

    static MultiGraph from_sequence_graph(const SequenceGraph& g) {
        MultiGraph mg;
        for (int v = 0; v < g.n; ++v) mg.vertices.insert(v);
        for (const auto& e : g.c1_edges)
            mg.edges.push_back({mg.next_id++, e.u, e.v, e.cycle, e.index});
        for (const auto& e : g.cpi_edges)
            mg.edges.push_back({mg.next_id++, e.u, e.v, e.cycle, e.index});
        return mg;
    }

    const Edge* find_edge(int id) const {
        for (const auto& e : edges)
            if (e.id == id) return &e;
        return nullptr;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges) {
            if (e.u == v) ++d;
            if (e.v == v) ++d; // loops count twice
        }
        return d;
    }

    std::vector<int> incident_edge_ids(int v) const {
        std::vector<int> ids;
        for (const auto& e : edges)
            if (e.u == v || e.v == v) ids.push_back(e.id);
        return ids;
    }
};

inline MultiGraph delete_edge(const MultiGraph& g, int edge_id) {
    MultiGraph out = g;
    auto it = std::find_if(out.edges.begin(), out.edges.end(),
                           [&](const MultiGraph::Edge& e) { return e.id == edge_id; });
    if (it == out.edges.end()) throw NoSuchEdge("no edge with id " + std::to_string(edge_id));
    out.edges.erase(it);
    return out;
}

/// Contracts edge (u,v): the surviving vertex keeps the lower label. Parallel
/// copies of the contracted edge would become loops and are removed; loops
/// already present at u or v survive at the merged vertex.
inline MultiGraph contract_edge(const MultiGraph& g, int edge_id) {
    const MultiGraph::Edge* e = g.find_edge(edge_id);
    if (!e) throw NoSuchEdge("no edge with id " + std::to_string(edge_id));
    if (e->u == e->v) throw LoopContraction("cannot contract a loop");
    const int keep = std::min(e->u, e->v);
    const int drop = std::max(e->u, e->v);

    MultiGraph out;
    out.next_id = g.next_id;
    out.vertices = g.vertices;
    out.vertices.erase(drop);
    for (const auto& f : g.edges) {
        if (f.id == edge_id) continue;
        int u = f.u == drop ? keep : f.u;
        int v = f.v == drop ? keep : f.v;
        bool was_parallel_copy = (f.u == e->u && f.v == e->v) || (f.u == e->v && f.v == e->u);
        if (was_parallel_copy) continue; // would be a loop created by the contraction
        out.edges.push_back({f.id, u, v, f.cycle, f.index});
    }
    return out;
}

/// One reduction step record for the minor trace.
struct ContractionStep {
    int vertex;       // degree-2 vertex being spliced out
    int edge_id;      // contracted edge
    int u, v;         // its endpoints at contraction time
    int kept;         // surviving label
};

struct MinorReduction {
    std::vector<MultiGraph::Edge> deleted_edges;
    std::vector<ContractionStep> contractions;
    MultiGraph result;
};

/// The constructive reduction from G_M to G'_N: delete the C1 edges
/// (N-1,N), ..., (M-2,M-1), (M-1,0), then splice out vertices M-1 down to N
/// by contracting one of the two remaining (Cpi) edges at each. Every spliced
/// vertex must have degree exactly 2; the edge toward the lower-labeled
/// neighbor is contracted, which keeps labels inside {0..N-1}.
inline MinorReduction minor_reduce_trace(const SequenceGraph& g_m, int n) {
    const int m = g_m.n;
    if (n < 1 || n >= m) throw InvalidRange("minor_reduce: need 1 <= N < M");

    MinorReduction red;
    MultiGraph cur = MultiGraph::from_sequence_graph(g_m);
    // C1 edge index i has id i (ids are assigned C1 first).
    for (int i = n - 1; i < m; ++i) {
        const MultiGraph::Edge* e = cur.find_edge(i);
        if (!e) throw NoSuchEdge("minor_reduce: missing C1 edge " + std::to_string(i));
        red.deleted_edges.push_back(*e);
        cur = delete_edge(cur, i);
    }
    for (int v = m - 1; v >= n; --v) {
        if (cur.degree(v) != 2)
            throw Error("minor_reduce: vertex " + std::to_string(v) +
                        " has degree " + std::to_string(cur.degree(v)) + ", expected 2");
        auto ids = cur.incident_edge_ids(v);
        // Pick the incident edge whose far endpoint is smallest (ties by id).
        int best = -1, best_other = -1;
        for (int id : ids) {
            const auto* e = cur.find_edge(id);
            int other = e->u == v ? e->v : e->u;
            if (best < 0 || other < best_other) {
                best = id;
                best_other = other;
            }
        }
        const auto* e = cur.find_edge(best);
        red.contractions.push_back({v, best, e->u, e->v, std::min(e->u, e->v)});
        cur = contract_edge(cur, best);
    }
    red.result = std::move(cur);
    return red;
}

inline MultiGraph minor_reduce(const SequenceGraph& g_m, int n) {
    return minor_reduce_trace(g_m, n).result;
}

/// Labeled-graph equality: same vertex label set and same edge multiset as
/// unordered endpoint pairs, ignoring the (cycle, index) identity tags.
inline bool is_same_labeled_graph(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices != b.vertices) return false;
    auto key = [](const MultiGraph& g) {
        std::vector<std::pair<int, int>> k;
        k.reserve(g.edges.size());
        for (const auto& e : g.edges)
            k.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

/// G'_N: the N-th sequence graph with the C1 edge (N-1, 0) deleted.
inline MultiGraph g_prime(const SequenceGraph& g) {
    MultiGraph mg = MultiGraph::from_sequence_graph(g);
    return delete_edge(mg, g.n - 1); // C1 edge index N-1 has id N-1
}

inline bool is_connected(const MultiGraph& g) {
    if (g.vertices.empty()) return true;
    std::map<int, std::vector<int>> adj;
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<int> seen;
    std::vector<int> stack{*g.vertices.begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == g.vertices.size();
}

} // namespace seqgraph
