#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "seqgraph/bits.hpp"
#include "seqgraph/dyadic.hpp"
#include "seqgraph/errors.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/sequence.hpp"

namespace seqgraph {

/// Identified boundary-segment family: h_k glues a piece of the top side to a
/// piece of the bottom side, v_k glues right to left.
enum class Axis { Horizontal, Vertical };

inline std::string segment_name(Axis axis, int k) {
    return (axis == Axis::Horizontal ? "h" : "v") + std::to_string(k);
}

/// Placement of the two identified copies of h_k / v_k along the boundary.
/// far_start is the position on the top (h) or right (v) side; near_start on
/// the bottom (h) or left (v) side. Both copies have the same length 2^(m-k).
struct SegmentMap {
    Axis axis = Axis::Horizontal;
    int k = 1;
    Dyadic far_start;
    Dyadic near_start;
    Dyadic length;
};

/// far_start = delta + sum_{j=1}^{k-1} 2^(m-j), near_start = delta + 2^(m-k).
inline SegmentMap segment_map(int m, const Dyadic& delta, int k, Axis axis) {
    if (k < 1) throw InvalidParam("segment_map: k must be >= 1");
    SegmentMap sm;
    sm.axis = axis;
    sm.k = k;
    sm.length = Dyadic::power_of_two(m - k);
    sm.far_start = delta + Dyadic::power_of_two(m) - Dyadic::power_of_two(m - k + 1);
    sm.near_start = delta + sm.length;
    return sm;
}

struct EPoint {
    Dyadic x, y;
    friend bool operator==(const EPoint& a, const EPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const EPoint& a, const EPoint& b) { return !(a == b); }
};

/// A route's jump through a segment identification: points[split] is the
/// boundary entry point, points[split+1] the identified exit point.
struct RouteCrossing {
    Axis axis = Axis::Horizontal;
    int k = 1;
    int split = 0;
};

struct ChamanaraRoute {
    int from = 0, to = 0;
    Cycle cycle = Cycle::C1;
    int index = 0;
    int case_id = 0; // 1..5
    std::vector<EPoint> points;
    std::optional<RouteCrossing> crossing;
};

/// Explicit embedding of the 4^m-th binary van der Corput sequence graph into
/// the Chamanara square [delta, 2^m + delta]^2 with halving identifications.
struct ChamanaraEmbedding {
    int m = 1;
    Dyadic epsilon; // 1/(8*2^m), strictly inside the bound 1/(4*2^m)
    Dyadic delta;   // -1/2 - epsilon
    std::vector<std::pair<int, int>> psi;  // lattice position of each vertex
    std::vector<ChamanaraRoute> routes;    // cases 1-4, on grid lines
    std::vector<ChamanaraRoute> reroutes;  // the two (N-1, 0) edges, case 5

    std::int64_t n() const { return std::int64_t{1} << (2 * m); }

    std::vector<const ChamanaraRoute*> all_routes() const {
        std::vector<const ChamanaraRoute*> out;
        out.reserve(routes.size() + reroutes.size());
        for (const auto& r : routes) out.push_back(&r);
        for (const auto& r : reroutes) out.push_back(&r);
        return out;
    }
};

/// Builds the five-case embedding. Vertices sit at psi(i) = (b1(i), r(b0(i)));
/// Cpi edges run vertically and C1 edges horizontally, jumping through h_k /
/// v_k from the top row / right column; the two (N-1, 0) edges are rerouted
/// through h_{m+1} and v_{m+1} within the corners next to psi(N-1) and psi(0).
inline ChamanaraEmbedding chamanara_embed(int m) {
    if (m < 1 || m > 10) throw InvalidParam("chamanara_embed: need 1 <= m <= 10");
    const std::int64_t side = std::int64_t{1} << m;       // 2^m
    const std::uint64_t n = std::uint64_t{1} << (2 * m);  // 4^m

    ChamanaraEmbedding e;
    e.m = m;
    e.epsilon = Dyadic::power_of_two(-(m + 3));
    e.delta = -(Dyadic::power_of_two(-1) + e.epsilon);

    e.psi.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto [b0, b1] = split_bits(i, m);
        e.psi.emplace_back(static_cast<int>(b1), static_cast<int>(reverse_bits(b0, m)));
    }

    const Dyadic top = Dyadic::integer(side) + e.delta; // also the right boundary
    const Dyadic bottom = e.delta;                      // also the left boundary
    auto ipt = [](std::int64_t x, std::int64_t y) {
        return EPoint{Dyadic::integer(x), Dyadic::integer(y)};
    };

    for (std::uint64_t i = 0; i < n; ++i) {
        auto [b0, b1] = split_bits(i, m);
        const std::int64_t x = e.psi[i].first;
        const std::int64_t y = e.psi[i].second;

        // Cpi edge (i, S(i)); its cycle index is pi^-1(i) = r(b(i)).
        ChamanaraRoute vert;
        vert.from = static_cast<int>(i);
        vert.cycle = Cycle::Cpi;
        vert.index = static_cast<int>(reverse_bits(i, 2 * m));
        if (i == n - 1) {
            // Case 5, vertical reroute: up from psi(N-1), slant into h_{m+1}
            // at the point where the grid line dropping from psi(0) emerges.
            vert.to = 0;
            vert.case_id = 5;
            EPoint start = ipt(side - 1, side - 1);
            EPoint bend{Dyadic::integer(side - 1),
                        Dyadic::integer(side - 1) + Dyadic::power_of_two(-2)};
            EPoint entry{Dyadic::integer(side) - Dyadic::integer(1) -
                             Dyadic::power_of_two(-1),
                         top};
            EPoint exit{Dyadic::integer(0), bottom};
            vert.points = {start, bend, entry, exit, ipt(0, 0)};
            vert.crossing = RouteCrossing{Axis::Horizontal, m + 1, 2};
        } else if (!all_ones(b0, m)) {
            // Case 1: adding from the left stays in b0, so psi moves up by 1.
            vert.to = static_cast<int>(vdc_successor_bits(i, m));
            vert.case_id = 1;
            vert.points = {ipt(x, y), ipt(x, y + 1)};
        } else {
            // Case 3: top row; the grid line continues through h_k where k is
            // the first zero from the left in b1.
            vert.to = static_cast<int>(vdc_successor_bits(i, m));
            vert.case_id = 3;
            const int k = first_zero_from_left(b1, m);
            const std::int64_t x_out =
                x + 3 * (std::int64_t{1} << (m - k)) - side; // leading ones cleared, k-th set
            vert.points = {ipt(x, side - 1), EPoint{Dyadic::integer(x), top},
                           EPoint{Dyadic::integer(x_out), bottom}, ipt(x_out, 0)};
            vert.crossing = RouteCrossing{Axis::Horizontal, k, 1};
        }
        if (vert.case_id == 5) e.reroutes.push_back(std::move(vert));
        else e.routes.push_back(std::move(vert));

        // C1 edge (i, i+1 mod N), cycle index i.
        ChamanaraRoute horiz;
        horiz.from = static_cast<int>(i);
        horiz.cycle = Cycle::C1;
        horiz.index = static_cast<int>(i);
        if (i == n - 1) {
            // Case 5, horizontal reroute through v_{m+1}.
            horiz.to = 0;
            horiz.case_id = 5;
            EPoint start = ipt(side - 1, side - 1);
            EPoint bend{Dyadic::integer(side - 1) + Dyadic::power_of_two(-2),
                        Dyadic::integer(side - 1)};
            EPoint entry{top, Dyadic::integer(side) - Dyadic::integer(1) -
                                  Dyadic::power_of_two(-1)};
            EPoint exit{bottom, Dyadic::integer(0)};
            horiz.points = {start, bend, entry, exit, ipt(0, 0)};
            horiz.crossing = RouteCrossing{Axis::Vertical, m + 1, 2};
        } else if (!all_ones(b1, m)) {
            // Case 2: adding 1 stays in b1, so psi moves right by 1.
            horiz.to = static_cast<int>(i + 1);
            horiz.case_id = 2;
            horiz.points = {ipt(x, y), ipt(x + 1, y)};
        } else {
            // Case 4: right column; through v_k, k = first zero from the
            // right in b0 = first zero from the left in r(b0) = y.
            horiz.to = static_cast<int>(i + 1);
            horiz.case_id = 4;
            const int k = first_zero_from_left(static_cast<std::uint64_t>(y), m);
            const std::int64_t y_out = y + 3 * (std::int64_t{1} << (m - k)) - side;
            horiz.points = {ipt(side - 1, y), EPoint{top, Dyadic::integer(y)},
                            EPoint{bottom, Dyadic::integer(y_out)}, ipt(0, y_out)};
            horiz.crossing = RouteCrossing{Axis::Vertical, k, 1};
        }
        if (horiz.case_id == 5) e.reroutes.push_back(std::move(horiz));
        else e.routes.push_back(std::move(horiz));
    }
    return e;
}

inline std::array<int, 5> chamanara_case_counts(const ChamanaraEmbedding& e) {
    std::array<int, 5> counts{};
    for (const auto* r : e.all_routes()) counts[r->case_id - 1]++;
    return counts;
}

struct Violation {
    std::string check;  // "structure", "segment-conflict", "lattice",
                        // "crossing-consistency", "reroute-region"
    std::string detail;
};

struct VerifyResult {
    bool ok = true;
    std::vector<Violation> violations;
};

namespace detail {

struct IPt {
    std::int64_t x = 0, y = 0;
    friend bool operator==(const IPt& a, const IPt& b) { return a.x == b.x && a.y == b.y; }
};

inline std::int64_t cross3(const IPt& o, const IPt& a, const IPt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool coord_between(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::min(a, b) <= c && c <= std::max(a, b);
}

inline bool on_segment(const IPt& p, const IPt& a, const IPt& b) {
    return cross3(a, b, p) == 0 && coord_between(a.x, b.x, p.x) && coord_between(a.y, b.y, p.y);
}

struct VSegment {
    IPt a, b;
    int route_ord;   // index into the flattened route list
    int piece;       // polyline start index of this piece
    int case_id;
};

} // namespace detail

/// Combinatorial/geometric certificate for a Chamanara embedding, all in
/// exact integer arithmetic (coordinates scaled by 2^(m+3)):
///   (a) no two routes share a grid segment or cross anywhere except at
///       common graph vertices,
///   (b) routes touch lattice points only at their own endpoints,
///   (c) every identification crossing exits at the exact image of its entry
///       point, strictly inside the identified segment pair,
///   (d) the two reroutes stay inside the L-inf corner balls of radius
///       1/2 + epsilon around psi(0) and psi(N-1).
inline VerifyResult verify_embedding(const ChamanaraEmbedding& e) {
    VerifyResult res;
    auto fail = [&](const std::string& check, const std::string& detail) {
        res.ok = false;
        res.violations.push_back({check, detail});
    };

    const int m = e.m;
    const int scale_bits = m + 3;
    const std::int64_t scale = std::int64_t{1} << scale_bits;
    const std::int64_t side = std::int64_t{1} << m;
    const std::int64_t n = e.n();

    auto scaled = [&](const EPoint& p) {
        return detail::IPt{p.x.scaled(scale_bits), p.y.scaled(scale_bits)};
    };
    auto describe = [](const ChamanaraRoute& r) {
        return std::string(cycle_name(r.cycle)) + "[" + std::to_string(r.index) + "] (" +
               std::to_string(r.from) + "->" + std::to_string(r.to) + ") case " +
               std::to_string(r.case_id);
    };

    const auto routes = e.all_routes();

    if (static_cast<std::int64_t>(e.psi.size()) != n)
        fail("structure", "psi table has wrong size");
    if (static_cast<std::int64_t>(routes.size()) != 2 * n)
        fail("structure", "expected 2N routes, got " + std::to_string(routes.size()));

    // Identity completeness: each cycle index exactly once per tag.
    {
        std::vector<int> seen_c1(n, 0), seen_cpi(n, 0);
        for (const auto* r : routes) {
            if (r->index < 0 || r->index >= n) {
                fail("structure", "route index out of range: " + describe(*r));
                continue;
            }
            (r->cycle == Cycle::C1 ? seen_c1 : seen_cpi)[r->index]++;
        }
        for (std::int64_t i = 0; i < n; ++i) {
            if (seen_c1[i] != 1) fail("structure", "C1 index " + std::to_string(i) + " covered " + std::to_string(seen_c1[i]) + " times");
            if (seen_cpi[i] != 1) fail("structure", "Cpi index " + std::to_string(i) + " covered " + std::to_string(seen_cpi[i]) + " times");
        }
    }

    // Per-route shape checks; collect physical segments.
    std::vector<detail::VSegment> segs;
    std::vector<std::array<detail::IPt, 2>> anchors(routes.size());
    for (size_t ro = 0; ro < routes.size(); ++ro) {
        const auto& r = *routes[ro];
        if (r.points.size() < 2) {
            fail("structure", "route with fewer than 2 points: " + describe(r));
            continue;
        }
        if (r.from < 0 || r.from >= n || r.to < 0 || r.to >= n) {
            fail("structure", "route endpoints out of range: " + describe(r));
            continue;
        }
        detail::IPt want_from{e.psi[r.from].first * scale, e.psi[r.from].second * scale};
        detail::IPt want_to{e.psi[r.to].first * scale, e.psi[r.to].second * scale};
        if (!(scaled(r.points.front()) == want_from))
            fail("structure", "route does not start at psi(from): " + describe(r));
        if (!(scaled(r.points.back()) == want_to))
            fail("structure", "route does not end at psi(to): " + describe(r));
        anchors[ro] = {scaled(r.points.front()), scaled(r.points.back())};

        int gap = -1;
        if (r.crossing) {
            gap = r.crossing->split;
            if (gap < 0 || gap + 1 >= static_cast<int>(r.points.size())) {
                fail("structure", "crossing split out of range: " + describe(r));
                gap = -1;
            }
        }
        for (int i = 0; i + 1 < static_cast<int>(r.points.size()); ++i) {
            if (i == gap) continue;
            detail::IPt a = scaled(r.points[i]);
            detail::IPt b = scaled(r.points[i + 1]);
            if (a == b) {
                fail("structure", "zero-length piece in " + describe(r));
                continue;
            }
            if (r.case_id != 5) {
                // Grid routes: axis-aligned on an integer grid line.
                bool vertical = a.x == b.x, horizontal = a.y == b.y;
                std::int64_t line = vertical ? a.x : a.y;
                if (!(vertical || horizontal) || line % scale != 0)
                    fail("structure", "grid route piece off the integer grid: " + describe(r));
            }
            segs.push_back({a, b, static_cast<int>(ro), i, r.case_id});
        }
    }

    // (a) pairwise conflicts.
    for (size_t s = 0; s < segs.size(); ++s) {
        for (size_t t = s + 1; t < segs.size(); ++t) {
            const auto& S = segs[s];
            const auto& T = segs[t];
            auto d1 = detail::cross3(S.a, S.b, T.a);
            auto d2 = detail::cross3(S.a, S.b, T.b);
            auto d3 = detail::cross3(T.a, T.b, S.a);
            auto d4 = detail::cross3(T.a, T.b, S.b);
            auto conflict = [&](const std::string& what) {
                fail("segment-conflict",
                     what + ": " + describe(*routes[S.route_ord]) + " vs " +
                         describe(*routes[T.route_ord]));
            };
            if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
                conflict("interior crossing");
                continue;
            }
            std::vector<detail::IPt> touches;
            auto add_touch = [&](const detail::IPt& p) {
                for (const auto& q : touches)
                    if (q == p) return;
                touches.push_back(p);
            };
            if (detail::on_segment(T.a, S.a, S.b)) add_touch(T.a);
            if (detail::on_segment(T.b, S.a, S.b)) add_touch(T.b);
            if (detail::on_segment(S.a, T.a, T.b)) add_touch(S.a);
            if (detail::on_segment(S.b, T.a, T.b)) add_touch(S.b);
            if (touches.empty()) continue;
            if (touches.size() > 1) {
                conflict("overlapping segments");
                continue;
            }
            const detail::IPt p = touches.front();
            bool end_of_s = p == S.a || p == S.b;
            bool end_of_t = p == T.a || p == T.b;
            if (!end_of_s || !end_of_t) {
                conflict("touch at a segment interior");
                continue;
            }
            if (S.route_ord == T.route_ord) {
                // Consecutive pieces of one polyline share exactly one point.
                bool adjacent = (T.piece == S.piece + 1 && p == S.b && p == T.a) ||
                                (S.piece == T.piece + 1 && p == T.b && p == S.a);
                if (!adjacent) conflict("self-touch of a route");
                continue;
            }
            const auto& as = anchors[S.route_ord];
            const auto& at = anchors[T.route_ord];
            bool anchor_s = p == as[0] || p == as[1];
            bool anchor_t = p == at[0] || p == at[1];
            if (!(anchor_s && anchor_t)) conflict("touch away from a shared vertex");
        }
    }

    // (b) lattice points only at route endpoints.
    for (const auto& S : segs) {
        const auto& as = anchors[S.route_ord];
        std::int64_t gx_lo = (std::min(S.a.x, S.b.x) + scale - 1) / scale;
        std::int64_t gx_hi = std::max(S.a.x, S.b.x) / scale;
        for (std::int64_t gx = std::max<std::int64_t>(gx_lo, 0);
             gx <= std::min(gx_hi, side - 1); ++gx) {
            std::int64_t gy_lo = (std::min(S.a.y, S.b.y) + scale - 1) / scale;
            std::int64_t gy_hi = std::max(S.a.y, S.b.y) / scale;
            for (std::int64_t gy = std::max<std::int64_t>(gy_lo, 0);
                 gy <= std::min(gy_hi, side - 1); ++gy) {
                detail::IPt p{gx * scale, gy * scale};
                if (!detail::on_segment(p, S.a, S.b)) continue;
                if (!(p == as[0] || p == as[1]))
                    fail("lattice", "route passes through lattice point (" +
                                        std::to_string(gx) + "," + std::to_string(gy) +
                                        "): " + describe(*routes[S.route_ord]));
            }
        }
    }

    // (c) identification crossings are exact.
    const Dyadic near_b = e.delta;
    const Dyadic far_b = Dyadic::integer(side) + e.delta;
    for (const auto* rp : routes) {
        const auto& r = *rp;
        if (!r.crossing) continue;
        if (r.crossing->split < 0 || r.crossing->split + 1 >= static_cast<int>(r.points.size()))
            continue; // already reported under structure
        const EPoint& entry = r.points[r.crossing->split];
        const EPoint& exit = r.points[r.crossing->split + 1];
        SegmentMap sm;
        try {
            sm = segment_map(m, e.delta, r.crossing->k, r.crossing->axis);
        } catch (const InvalidParam&) {
            fail("crossing-consistency", "bad segment index in " + describe(r));
            continue;
        }
        const bool horizontal = r.crossing->axis == Axis::Horizontal;
        const Dyadic& entry_b = horizontal ? entry.y : entry.x; // boundary coordinate
        const Dyadic& exit_b = horizontal ? exit.y : exit.x;
        const Dyadic& entry_pos = horizontal ? entry.x : entry.y;
        const Dyadic& exit_pos = horizontal ? exit.x : exit.y;
        Dyadic off_entry, off_exit;
        if (entry_b == far_b && exit_b == near_b) {
            off_entry = entry_pos - sm.far_start;
            off_exit = exit_pos - sm.near_start;
        } else if (entry_b == near_b && exit_b == far_b) {
            off_entry = entry_pos - sm.near_start;
            off_exit = exit_pos - sm.far_start;
        } else {
            fail("crossing-consistency",
                 "crossing points not on the identified boundary pair: " + describe(r));
            continue;
        }
        if (!(off_entry > Dyadic::integer(0)) || !(off_entry < sm.length))
            fail("crossing-consistency",
                 "entry not strictly inside " + segment_name(r.crossing->axis, r.crossing->k) +
                     ": " + describe(r));
        if (off_entry != off_exit)
            fail("crossing-consistency",
                 "exit is not the identified image of the entry through " +
                     segment_name(r.crossing->axis, r.crossing->k) + ": " + describe(r));
    }

    // (d) reroutes stay inside the corner balls around psi(0) and psi(N-1).
    {
        const std::int64_t radius = (scale / 2) + 1; // (1/2 + epsilon) scaled
        const detail::IPt c0{0, 0};
        const detail::IPt c1{(side - 1) * scale, (side - 1) * scale};
        auto in_ball = [&](const detail::IPt& p, const detail::IPt& c) {
            return std::max(std::llabs(p.x - c.x), std::llabs(p.y - c.y)) <= radius;
        };
        if (e.reroutes.size() != 2)
            fail("structure", "expected exactly 2 reroutes, got " +
                                  std::to_string(e.reroutes.size()));
        for (const auto& S : segs) {
            if (S.case_id != 5) continue;
            bool ok_ball = (in_ball(S.a, c0) && in_ball(S.b, c0)) ||
                           (in_ball(S.a, c1) && in_ball(S.b, c1));
            if (!ok_ball)
                fail("reroute-region", "reroute piece leaves the corner regions: " +
                                           describe(*routes[S.route_ord]));
        }
    }

    return res;
}

} // namespace seqgraph
