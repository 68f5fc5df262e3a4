#include <gtest/gtest.h>

#include <set>

#include "seqgraph/embedding.hpp"

using namespace seqgraph;

namespace {

bool has_violation(const VerifyResult& res, const std::string& check) {
    for (const auto& v : res.violations)
        if (v.check == check) return true;
    return false;
}

} // namespace

TEST(Psi, SplitExamples) {
    auto e = chamanara_embed(2);
    EXPECT_EQ(e.psi[1], (std::pair<int, int>{1, 0}));   // b1(1)=01, r(b0(1))=00
    EXPECT_EQ(e.psi[10], (std::pair<int, int>{2, 1}));  // b1(10)=10, r(b0(10))=01
    EXPECT_EQ(e.psi[0], (std::pair<int, int>{0, 0}));
    EXPECT_EQ(e.psi[15], (std::pair<int, int>{3, 3})); // N-1 at the top-right corner
}

TEST(Psi, BijectionOntoLattice) {
    for (int m = 1; m <= 4; ++m) {
        auto e = chamanara_embed(m);
        std::set<std::pair<int, int>> seen(e.psi.begin(), e.psi.end());
        EXPECT_EQ(seen.size(), e.psi.size()) << "m=" << m;
        for (const auto& [x, y] : seen) {
            EXPECT_GE(x, 0);
            EXPECT_LT(x, 1 << m);
            EXPECT_GE(y, 0);
            EXPECT_LT(y, 1 << m);
        }
    }
}

TEST(SegmentMapOp, FirstHalvingAtM2) {
    Dyadic eps = Dyadic::power_of_two(-5);
    Dyadic delta = -(Dyadic::power_of_two(-1) + eps);
    auto sm = segment_map(2, delta, 1, Axis::Horizontal);
    EXPECT_EQ(sm.far_start, delta);                        // top copy starts at delta
    EXPECT_EQ(sm.near_start, delta + Dyadic::integer(2));  // bottom copy at delta + 2
    EXPECT_EQ(sm.length, Dyadic::integer(2));
}

TEST(SegmentMapOp, AxisSymmetryAndDeepSegments) {
    Dyadic eps = Dyadic::power_of_two(-6);
    Dyadic delta = -(Dyadic::power_of_two(-1) + eps);
    for (int k = 1; k <= 5; ++k) {
        auto h = segment_map(3, delta, k, Axis::Horizontal);
        auto v = segment_map(3, delta, k, Axis::Vertical);
        EXPECT_EQ(h.far_start, v.far_start);   // v_k is h_k with axes swapped
        EXPECT_EQ(h.near_start, v.near_start);
        EXPECT_EQ(h.length, v.length);
    }
    // k = m+2 (used by the reroute analysis) still yields a valid window.
    auto deep = segment_map(3, delta, 5, Axis::Horizontal);
    EXPECT_EQ(deep.length, Dyadic::power_of_two(-2));
    EXPECT_TRUE(deep.far_start > delta);
    EXPECT_THROW(segment_map(3, delta, 0, Axis::Horizontal), InvalidParam);
}

TEST(SegmentMapOp, IdentificationRoundTrip) {
    // Crossing a segment and crossing back lands at the starting coordinate.
    Dyadic eps = Dyadic::power_of_two(-7);
    Dyadic delta = -(Dyadic::power_of_two(-1) + eps);
    for (int k = 1; k <= 6; ++k) {
        auto sm = segment_map(4, delta, k, Axis::Vertical);
        Dyadic offset = Dyadic::make(3, 3); // 3/8 of the way in, scaled below
        Dyadic p = sm.far_start + offset;
        Dyadic image = sm.near_start + (p - sm.far_start);
        Dyadic back = sm.far_start + (image - sm.near_start);
        EXPECT_EQ(back, p) << "k=" << k;
    }
}

TEST(Chamanara, SmallestCaseStructure) {
    auto e = chamanara_embed(1);
    EXPECT_EQ(e.n(), 4);
    EXPECT_EQ(e.routes.size() + e.reroutes.size(), 8u);
    ASSERT_EQ(e.reroutes.size(), 2u);
    for (const auto& r : e.reroutes) {
        EXPECT_EQ(r.from, 3);
        EXPECT_EQ(r.to, 0);
        ASSERT_TRUE(r.crossing.has_value());
        EXPECT_EQ(r.crossing->k, 2); // h_{m+1} / v_{m+1}
    }
    EXPECT_TRUE(verify_embedding(e).ok);
}

TEST(Chamanara, VerifiesUpToM4) {
    for (int m = 1; m <= 4; ++m) {
        auto res = verify_embedding(chamanara_embed(m));
        EXPECT_TRUE(res.ok) << "m=" << m;
        EXPECT_TRUE(res.violations.empty());
    }
}

TEST(Chamanara, CaseCountFormulas) {
    for (int m = 1; m <= 4; ++m) {
        auto counts = chamanara_case_counts(chamanara_embed(m));
        const int fourm = 1 << (2 * m), twom = 1 << m;
        EXPECT_EQ(counts[0], fourm - twom);
        EXPECT_EQ(counts[1], fourm - twom);
        EXPECT_EQ(counts[2], twom - 1);
        EXPECT_EQ(counts[3], twom - 1);
        EXPECT_EQ(counts[4], 2);
        EXPECT_EQ(counts[0] + counts[1] + counts[2] + counts[3] + counts[4], 2 * fourm);
    }
}

TEST(Chamanara, RejectsBadM) {
    EXPECT_THROW(chamanara_embed(0), InvalidParam);
    EXPECT_THROW(chamanara_embed(11), InvalidParam);
}

TEST(VerifyEmbedding, DetectsSharedGridSegment) {
    auto e = chamanara_embed(2);
    // Force one Case-1 edge onto another Case-1 edge's segment.
    int first = -1;
    for (size_t i = 0; i < e.routes.size(); ++i) {
        if (e.routes[i].case_id != 1) continue;
        if (first < 0) { first = static_cast<int>(i); continue; }
        e.routes[i].points = e.routes[first].points;
        break;
    }
    auto res = verify_embedding(e);
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(has_violation(res, "segment-conflict"));
}

TEST(VerifyEmbedding, DetectsCrossingExitOffByOne) {
    auto e = chamanara_embed(2);
    for (auto& r : e.routes) {
        if (r.case_id != 3) continue;
        // Shift the exit column by one lattice unit.
        int split = r.crossing->split;
        r.points[split + 1].x = r.points[split + 1].x + Dyadic::integer(1);
        r.points[split + 2].x = r.points[split + 2].x + Dyadic::integer(1);
        r.to = -1; // keep endpoint bookkeeping silent about psi mismatch
        break;
    }
    auto res = verify_embedding(e);
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(has_violation(res, "crossing-consistency"));
}

TEST(VerifyEmbedding, DetectsLatticeTrespass) {
    auto e = chamanara_embed(2);
    for (auto& r : e.routes) {
        if (r.case_id != 1) continue;
        // Stretch a vertical unit edge across two rows: it now passes
        // through the lattice point between them.
        r.points[1].y = r.points[1].y + Dyadic::integer(1);
        break;
    }
    auto res = verify_embedding(e);
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(has_violation(res, "lattice"));
}

TEST(VerifyEmbedding, DetectsRerouteLeavingCornerRegion) {
    auto e = chamanara_embed(2);
    // Drag the first reroute's bend far away from the corner ball.
    e.reroutes[0].points[1].y = e.reroutes[0].points[1].y + Dyadic::integer(2);
    auto res = verify_embedding(e);
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(has_violation(res, "reroute-region"));
}

TEST(VerifyEmbedding, DetectsMissingRoute) {
    auto e = chamanara_embed(1);
    e.routes.pop_back();
    auto res = verify_embedding(e);
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(has_violation(res, "structure"));
}

TEST(Chamanara, RerouteCrossingsMatchSegmentMap) {
    for (int m = 1; m <= 3; ++m) {
        auto e = chamanara_embed(m);
        for (const auto& r : e.reroutes) {
            ASSERT_TRUE(r.crossing.has_value());
            EXPECT_EQ(r.crossing->k, m + 1);
            auto sm = segment_map(m, e.delta, r.crossing->k, r.crossing->axis);
            const EPoint& entry = r.points[r.crossing->split];
            const EPoint& exit = r.points[r.crossing->split + 1];
            Dyadic pos_entry = r.crossing->axis == Axis::Horizontal ? entry.x : entry.y;
            Dyadic pos_exit = r.crossing->axis == Axis::Horizontal ? exit.x : exit.y;
            EXPECT_EQ(pos_entry - sm.far_start, pos_exit - sm.near_start);
            // Both grid lines from psi(0) leave the square at offset epsilon.
            EXPECT_EQ(pos_exit - sm.near_start, e.epsilon);
        }
    }
}
