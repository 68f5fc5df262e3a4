#pragma once

#include <json.hpp>

#include <string>

#include "seqgraph/embedding.hpp"
#include "seqgraph/gaps.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/iet.hpp"
#include "seqgraph/rotation.hpp"
#include "seqgraph/sequence.hpp"

namespace seqgraph {

using nlohmann::json;

// Graph schema: {"n": int, "edges": [{"u", "v", "cycle": "C1"|"Cpi", "index"}]}

inline json to_json(const SequenceGraph& g) {
    json edges = json::array();
    for (const auto& e : g.all_edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"cycle", cycle_name(e.cycle)}, {"index", e.index}});
    return json{{"n", g.n}, {"edges", edges}};
}

inline json to_json(const MultiGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"cycle", cycle_name(e.cycle)}, {"index", e.index}});
    return json{{"vertices", std::vector<int>(g.vertices.begin(), g.vertices.end())},
                {"edges", edges}};
}

/// Rebuilds a SequenceGraph from its JSON form, validating both cycles.
inline SequenceGraph sequence_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must have 'n' and 'edges'");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("graph JSON: n must be >= 1");
    std::vector<int> pi(n, -1);
    std::vector<bool> c1_seen(n, false), cpi_seen(n, false);
    std::vector<std::pair<int, int>> cpi(n, {-1, -1});
    for (const auto& je : j.at("edges")) {
        const int u = je.at("u").get<int>();
        const int v = je.at("v").get<int>();
        const int idx = je.at("index").get<int>();
        const std::string cyc = je.at("cycle").get<std::string>();
        if (u < 0 || u >= n || v < 0 || v >= n || idx < 0 || idx >= n)
            throw ParseError("graph JSON: edge out of range");
        if (cyc == "C1") {
            if (c1_seen[idx] || u != idx || v != (idx + 1) % n)
                throw ParseError("graph JSON: bad C1 edge at index " + std::to_string(idx));
            c1_seen[idx] = true;
        } else if (cyc == "Cpi") {
            if (cpi_seen[idx]) throw ParseError("graph JSON: duplicate Cpi index");
            cpi_seen[idx] = true;
            cpi[idx] = {u, v};
        } else {
            throw ParseError("graph JSON: unknown cycle tag '" + cyc + "'");
        }
    }
    for (int i = 0; i < n; ++i)
        if (!c1_seen[i] || !cpi_seen[i]) throw ParseError("graph JSON: missing edges");
    for (int i = 0; i < n; ++i) pi[i] = cpi[i].first;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (pi[i] < 0 || used[pi[i]]) throw ParseError("graph JSON: Cpi is not a permutation");
        used[pi[i]] = true;
        if (cpi[i].second != cpi[(i + 1) % n].first)
            throw ParseError("graph JSON: Cpi edges do not chain into a cycle");
    }
    SequenceGraph g;
    g.n = n;
    g.pi = pi;
    for (int i = 0; i < n; ++i) {
        g.c1_edges.push_back({i, (i + 1) % n, Cycle::C1, i});
        g.cpi_edges.push_back({g.pi[i], g.pi[(i + 1) % n], Cycle::Cpi, i});
    }
    return g;
}

inline json to_json(const GapProfile& p) {
    json gaps = json::array();
    for (const auto& r : p.gaps)
        gaps.push_back({{"value", r.value}, {"lo", r.lo}, {"hi", r.hi}});
    return json{{"gaps", gaps},
                {"distinct_count", p.distinct_count},
                {"pi1", p.pi1},
                {"piN1", p.piN1}};
}

// Dyadic coordinates serialize as exact doubles (their numerators are tiny,
// far below the 53-bit mantissa).

inline json to_json(const EPoint& p) { return json::array({p.x.to_double(), p.y.to_double()}); }

inline json to_json(const ChamanaraRoute& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    json out{{"from", r.from}, {"to", r.to},    {"cycle", cycle_name(r.cycle)},
             {"index", r.index}, {"case", r.case_id}, {"polyline", pts}};
    if (r.crossing) {
        out["crossing"] = {{"segment", segment_name(r.crossing->axis, r.crossing->k)},
                           {"entry", to_json(r.points[r.crossing->split])},
                           {"exit", to_json(r.points[r.crossing->split + 1])}};
    } else {
        out["crossing"] = nullptr;
    }
    return out;
}

inline json to_json(const ChamanaraEmbedding& e, const VerifyResult& verdict) {
    json pts = json::array();
    for (const auto& [x, y] : e.psi) pts.push_back(json::array({x, y}));
    json routes = json::array();
    for (const auto& r : e.routes) routes.push_back(to_json(r));
    json reroutes = json::array();
    for (const auto& r : e.reroutes) reroutes.push_back(to_json(r));
    auto counts = chamanara_case_counts(e);
    json cert = json::array();
    for (const auto& v : verdict.violations)
        cert.push_back({{"check", v.check}, {"detail", v.detail}});
    return json{{"m", e.m},
                {"n", e.n()},
                {"epsilon", e.epsilon.to_double()},
                {"delta", e.delta.to_double()},
                {"points", pts},
                {"routes", routes},
                {"reroutes", reroutes},
                {"route_count", e.routes.size() + e.reroutes.size()},
                {"case_counts", counts},
                {"verified", verdict.ok},
                {"certificate", cert}};
}

inline json to_json(const FaceTraceResult& f) {
    return json{{"faces", f.faces},
                {"euler_characteristic", f.euler},
                {"genus", f.genus},
                {"face_sizes", f.face_sizes}};
}

inline json to_json(const MinorReduction& red) {
    json deleted = json::array();
    for (const auto& e : red.deleted_edges)
        deleted.push_back({{"u", e.u}, {"v", e.v}, {"cycle", cycle_name(e.cycle)}, {"index", e.index}});
    json steps = json::array();
    for (const auto& c : red.contractions)
        steps.push_back({{"vertex", c.vertex}, {"u", c.u}, {"v", c.v}, {"kept", c.kept}});
    return json{{"deleted_edges", deleted},
                {"contractions", steps},
                {"result", to_json(red.result)}};
}

inline json to_json(const OrbitReport& rep) {
    json pts = json::array();
    for (const auto& p : rep.points) pts.push_back(p.to_double());
    json out{{"points", pts}, {"distinct_ok", rep.distinct_ok}};
    out["revisit_index"] = rep.revisit_index ? json(*rep.revisit_index) : json(nullptr);
    return out;
}

} // namespace seqgraph
