#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "seqgraph/embedding.hpp"
#include "seqgraph/graph.hpp"

namespace seqgraph {

namespace detail {

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline void svg_line(std::string& out, double x1, double y1, double x2, double y2,
                     const std::string& style) {
    out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
           "\" y2=\"" + fmt(y2) + "\" " + style + "/>\n";
}

inline void svg_circle(std::string& out, double cx, double cy, double r,
                       const std::string& style) {
    out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) + "\" " +
           style + "/>\n";
}

inline void svg_text(std::string& out, double x, double y, const std::string& text,
                     const std::string& style) {
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" " + style + ">" + text +
           "</text>\n";
}

} // namespace detail

/// Chord-diagram drawing: vertices on a circle, the two Hamiltonian cycles in
/// two colors.
inline std::string svg_sequence_graph(const SequenceGraph& g) {
    const double size = 640, cx = size / 2, cy = size / 2, r = size / 2 - 60;
    const double pi = 3.14159265358979323846;
    auto px = [&](int v) { return cx + r * std::cos(2 * pi * v / g.n - pi / 2); };
    auto py = [&](int v) { return cy + r * std::sin(2 * pi * v / g.n - pi / 2); };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      detail::fmt(size) + "\" height=\"" + detail::fmt(size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : g.c1_edges)
        detail::svg_line(out, px(e.u), py(e.u), px(e.v), py(e.v),
                         "stroke=\"#1f77b4\" stroke-width=\"1.5\"");
    for (const auto& e : g.cpi_edges)
        detail::svg_line(out, px(e.u), py(e.u), px(e.v), py(e.v),
                         "stroke=\"#d62728\" stroke-width=\"1.5\"");
    for (int v = 0; v < g.n; ++v) {
        detail::svg_circle(out, px(v), py(v), 4, "fill=\"black\"");
        if (g.n <= 64)
            detail::svg_text(out, px(v) + 6, py(v) - 6, std::to_string(v),
                             "font-size=\"11\" font-family=\"sans-serif\"");
    }
    out += "</svg>\n";
    return out;
}

/// The unfolded Chamanara square: boundary with identified segments marked by
/// matching tick-mark counts, lattice vertices, grid-line routes and the two
/// reroutes in distinct styles.
inline std::string svg_chamanara(const ChamanaraEmbedding& e) {
    const int side = 1 << e.m;
    const double unit = side <= 4 ? 120.0 : 480.0 / side;
    const double margin = 80;
    const double lo = e.delta.to_double();
    const double span = side * 1.0; // boundary length
    const double size = span * unit + 2 * margin;
    auto X = [&](double x) { return margin + (x - lo) * unit; };
    auto Y = [&](double y) { return size - (margin + (y - lo) * unit); }; // flip y

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      detail::fmt(size) + "\" height=\"" + detail::fmt(size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double hi = lo + span;
    // Square boundary.
    detail::svg_line(out, X(lo), Y(lo), X(hi), Y(lo), "stroke=\"black\" stroke-width=\"1\"");
    detail::svg_line(out, X(lo), Y(hi), X(hi), Y(hi), "stroke=\"black\" stroke-width=\"1\"");
    detail::svg_line(out, X(lo), Y(lo), X(lo), Y(hi), "stroke=\"black\" stroke-width=\"1\"");
    detail::svg_line(out, X(hi), Y(lo), X(hi), Y(hi), "stroke=\"black\" stroke-width=\"1\"");

    // Identification tick marks: k ticks at the midpoint of each copy of
    // h_k / v_k, down to the resolution used by the reroutes (k = m+2).
    for (int k = 1; k <= e.m + 2; ++k) {
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
            SegmentMap sm = segment_map(e.m, e.delta, k, axis);
            double mid_far = sm.far_start.to_double() + sm.length.to_double() / 2;
            double mid_near = sm.near_start.to_double() + sm.length.to_double() / 2;
            double tick_gap = std::min(0.08 * sm.length.to_double(), 0.06);
            for (int t = 0; t < k; ++t) {
                double off = (t - (k - 1) / 2.0) * tick_gap;
                if (axis == Axis::Horizontal) {
                    detail::svg_line(out, X(mid_far + off), Y(hi) - 5, X(mid_far + off),
                                     Y(hi) + 5, "stroke=\"#444444\" stroke-width=\"1\"");
                    detail::svg_line(out, X(mid_near + off), Y(lo) - 5, X(mid_near + off),
                                     Y(lo) + 5, "stroke=\"#444444\" stroke-width=\"1\"");
                } else {
                    detail::svg_line(out, X(hi) - 5, Y(mid_far + off), X(hi) + 5,
                                     Y(mid_far + off), "stroke=\"#444444\" stroke-width=\"1\"");
                    detail::svg_line(out, X(lo) - 5, Y(mid_near + off), X(lo) + 5,
                                     Y(mid_near + off), "stroke=\"#444444\" stroke-width=\"1\"");
                }
            }
        }
    }

    auto draw_route = [&](const ChamanaraRoute& r, const std::string& style) {
        int gap = r.crossing ? r.crossing->split : -1;
        for (int i = 0; i + 1 < static_cast<int>(r.points.size()); ++i) {
            if (i == gap) continue;
            detail::svg_line(out, X(r.points[i].x.to_double()), Y(r.points[i].y.to_double()),
                             X(r.points[i + 1].x.to_double()),
                             Y(r.points[i + 1].y.to_double()), style);
        }
    };
    for (const auto& r : e.routes)
        draw_route(r, "stroke=\"#00b0b0\" stroke-width=\"1.4\"");
    for (const auto& r : e.reroutes)
        draw_route(r, "stroke=\"#d02090\" stroke-width=\"1.8\"");

    for (const auto& [x, y] : e.psi)
        detail::svg_circle(out, X(x), Y(y), side <= 8 ? 4.0 : 2.5, "fill=\"black\"");
    out += "</svg>\n";
    return out;
}

/// Flat-torus strip for the circulant graph C_N({1, c}): the fundamental
/// domain is an N x 1 row of unit squares; (x, 1) is identified with
/// (x + c, 0), so Cpi edges are the verticals and C1 edges run along the
/// bottom. Ghost labels on top show the identified vertex.
inline std::string svg_torus_circulant(int n, int c) {
    const double unit = std::min(80.0, 1200.0 / n);
    const double margin = 60;
    const double w = n * unit + 2 * margin, h = unit + 2 * margin + 30;
    auto X = [&](double x) { return margin + x * unit; };
    auto Y = [&](double y) { return h - margin - y * unit; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(w) +
                      "\" height=\"" + detail::fmt(h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    detail::svg_line(out, X(0), Y(0), X(n), Y(0), "stroke=\"black\" stroke-width=\"1\"");
    detail::svg_line(out, X(0), Y(1), X(n), Y(1), "stroke=\"black\" stroke-width=\"1\"");
    detail::svg_line(out, X(0), Y(0), X(0), Y(1),
                     "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    detail::svg_line(out, X(n), Y(0), X(n), Y(1),
                     "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    for (int v = 0; v < n; ++v) {
        detail::svg_line(out, X(v), Y(0), X(v + 1), Y(0),
                         "stroke=\"#1f77b4\" stroke-width=\"2\"");
        detail::svg_line(out, X(v), Y(0), X(v), Y(1), "stroke=\"#d62728\" stroke-width=\"2\"");
    }
    for (int v = 0; v < n; ++v) {
        detail::svg_circle(out, X(v), Y(0), 4, "fill=\"black\"");
        detail::svg_circle(out, X(v), Y(1), 3, "fill=\"none\" stroke=\"black\"");
        if (n <= 48) {
            detail::svg_text(out, X(v) - 4, Y(0) + 18, std::to_string(v),
                             "font-size=\"11\" font-family=\"sans-serif\"");
            detail::svg_text(out, X(v) - 4, Y(1) - 8, std::to_string((v + c) % n),
                             "font-size=\"11\" font-family=\"sans-serif\" fill=\"#666666\"");
        }
    }
    detail::svg_text(out, margin, h - 18,
                     "flat torus: (x, 1) ~ (x + " + std::to_string(c) +
                         ", 0), (0, y) ~ (" + std::to_string(n) + ", y)",
                     "font-size=\"12\" font-family=\"sans-serif\"");
    out += "</svg>\n";
    return out;
}

} // namespace seqgraph
