#pragma once

#include <algorithm>
#include <vector>

#include "seqgraph/errors.hpp"
#include "seqgraph/graph.hpp"

namespace seqgraph {

/// Combinatorial map: edge e owns darts 2e (at tail) and 2e+1 (at head);
/// every vertex carries a cyclic order of its incident darts.
struct RotationSystem {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edge_endpoints; // edge e = (tail, head)
    std::vector<std::vector<int>> order;             // order[v]: darts, cyclically

    int num_edges() const { return static_cast<int>(edge_endpoints.size()); }
    int num_darts() const { return 2 * num_edges(); }
    static int opposite(int dart) { return dart ^ 1; }
    int dart_vertex(int dart) const {
        const auto& e = edge_endpoints[dart / 2];
        return (dart & 1) == 0 ? e.first : e.second;
    }
};

struct FaceTraceResult {
    int faces = 0;
    int euler = 0;
    int genus = 0;
    std::vector<int> face_sizes;
};

/// Traces faces by the next-dart rule (follow the edge, take the next dart in
/// the stored cyclic order at the far end) and evaluates chi = V - E + F.
/// Requires a consistent dart bookkeeping on a connected multigraph.
inline FaceTraceResult face_trace(const RotationSystem& rs) {
    const int nd = rs.num_darts();
    std::vector<int> pos_vertex(nd, -1);
    std::vector<int> next_at_vertex(nd, -1);
    int listed = 0;
    for (int v = 0; v < rs.num_vertices; ++v) {
        const auto& ord = rs.order[v];
        for (size_t i = 0; i < ord.size(); ++i) {
            int d = ord[i];
            if (d < 0 || d >= nd || pos_vertex[d] != -1)
                throw InvalidRotation("dart listed twice or out of range");
            if (rs.dart_vertex(d) != v)
                throw InvalidRotation("dart listed at the wrong vertex");
            pos_vertex[d] = v;
            next_at_vertex[d] = ord[(i + 1) % ord.size()];
        }
        listed += static_cast<int>(ord.size());
    }
    if (listed != nd) throw InvalidRotation("some darts missing from the rotation");

    // Connectivity of the underlying multigraph.
    if (rs.num_vertices > 0) {
        std::vector<std::vector<int>> adj(rs.num_vertices);
        for (const auto& [u, v] : rs.edge_endpoints) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> seen(rs.num_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != rs.num_vertices)
            throw InvalidRotation("face_trace requires a connected multigraph");
    }

    FaceTraceResult res;
    std::vector<char> visited(nd, 0);
    for (int d0 = 0; d0 < nd; ++d0) {
        if (visited[d0]) continue;
        int size = 0;
        int d = d0;
        do {
            visited[d] = 1;
            ++size;
            d = next_at_vertex[RotationSystem::opposite(d)];
        } while (d != d0);
        ++res.faces;
        res.face_sizes.push_back(size);
    }
    std::sort(res.face_sizes.begin(), res.face_sizes.end());
    res.euler = rs.num_vertices - rs.num_edges() + res.faces;
    if (res.euler % 2 != 0) throw InvalidRotation("odd Euler characteristic");
    res.genus = (2 - res.euler) / 2;
    return res;
}

/// Rotation system for the circulant graph C_N({1, c}) with the lattice dart
/// order (+1, +c, -1, -c) at every vertex (transposed: (+1, -c, -1, +c)).
/// Parallel edges (c = +-1 mod N) are fine: each edge keeps its own darts.
inline RotationSystem torus_rotation_system(int n, int c, bool transposed = false) {
    if (n < 2) throw DegenerateConnectionSet("torus rotation needs N >= 2");
    c = ((c % n) + n) % n;
    if (c == 0) throw DegenerateConnectionSet("connection step c = 0 mod N gives loops");

    RotationSystem rs;
    rs.num_vertices = n;
    rs.edge_endpoints.reserve(2 * n);
    for (int v = 0; v < n; ++v) rs.edge_endpoints.emplace_back(v, (v + 1) % n);     // C1: edge v
    for (int v = 0; v < n; ++v) rs.edge_endpoints.emplace_back(v, (v + c) % n);     // Cpi: edge n+v
    rs.order.resize(n);
    for (int v = 0; v < n; ++v) {
        int out1 = 2 * v;                              // to v+1
        int outc = 2 * (n + v);                        // to v+c
        int in1 = 2 * ((v - 1 + n) % n) + 1;           // from v-1
        int inc = 2 * (n + (v - c + n) % n) + 1;       // from v-c
        if (!transposed)
            rs.order[v] = {out1, outc, in1, inc};
        else
            rs.order[v] = {out1, inc, in1, outc};
    }
    return rs;
}

/// Rotation for an arbitrary sequence graph: at vertex i the darts are
/// ordered (i+1, S(i), i-1, S^-1(i)), alternating the two cycles as the two
/// "orthogonal directions". Optionally omits the C1 edge (N-1, 0), leaving
/// its endpoints with three darts.
inline RotationSystem canonical_rotation(const SequenceGraph& g, bool drop_last_c1 = false) {
    const int n = g.n;
    if (n < 3) throw DegenerateGraph("canonical_rotation needs N >= 3");

    std::vector<int> pi_inv(n);
    for (int i = 0; i < n; ++i) pi_inv[g.pi[i]] = i;

    RotationSystem rs;
    rs.num_vertices = n;
    // C1 edge index i -> edge id i (id n-1 skipped when dropped); Cpi edge
    // index j -> edge id after the C1 block.
    const int c1_count = drop_last_c1 ? n - 1 : n;
    std::vector<int> c1_id(n, -1);
    for (int i = 0; i < c1_count; ++i) {
        c1_id[i] = static_cast<int>(rs.edge_endpoints.size());
        rs.edge_endpoints.emplace_back(i, (i + 1) % n);
    }
    std::vector<int> cpi_id(n, -1);
    for (int j = 0; j < n; ++j) {
        cpi_id[j] = static_cast<int>(rs.edge_endpoints.size());
        rs.edge_endpoints.emplace_back(g.pi[j], g.pi[(j + 1) % n]);
    }

    rs.order.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> ord;
        if (c1_id[v] >= 0) ord.push_back(2 * c1_id[v]);            // out along C1 to v+1
        ord.push_back(2 * cpi_id[pi_inv[v]]);                      // out along Cpi to S(v)
        int prev = (v - 1 + n) % n;
        if (c1_id[prev] >= 0) ord.push_back(2 * c1_id[prev] + 1);  // in along C1 from v-1
        int jprev = (pi_inv[v] - 1 + n) % n;
        ord.push_back(2 * cpi_id[jprev] + 1);                      // in along Cpi from S^-1(v)
        rs.order[v] = std::move(ord);
    }
    return rs;
}

} // namespace seqgraph
