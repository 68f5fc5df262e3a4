#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "seqgraph/gaps.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/iet.hpp"
#include "seqgraph/sequence.hpp"

using namespace seqgraph;

namespace {

constexpr int kPrec = 128;

BigFloat bf(double v) { return BigFloat::parse(std::to_string(v), kPrec); }

IETSpec example_iet4() {
    return iet_parse_spec("perm: 3 1 4 2\nlengths: 1/(2*pi), 1/(4*pi), 1/(3*pi), rest\n",
                          kPrec);
}

IETSpec example_iet6() {
    return iet_parse_spec(
        "perm: 3 1 6 5 4 2\n"
        "lengths: 1/pi, 1/(2*pi), 1/(3*pi), 1/(4*pi), 1/(5*pi), rest\n",
        kPrec);
}

} // namespace

TEST(IETNew, GoldenTwoInterval) {
    auto t = kronecker_iet(ThetaSpec::golden(), IETConvention::AsWritten, kPrec);
    // alpha = frac(golden) = 0.618..., s = (0, alpha), s' = (1 - alpha, 0)
    EXPECT_NEAR(t.s[0].to_double(), 0.0, 1e-15);
    EXPECT_NEAR(t.s[1].to_double(), 0.6180339887, 1e-9);
    EXPECT_NEAR(t.s_prime[0].to_double(), 0.3819660112, 1e-9);
    EXPECT_NEAR(t.s_prime[1].to_double(), 0.0, 1e-15);
}

TEST(IETNew, IdentityMap) {
    auto t = iet_new({1}, {BigFloat::from_ui(1, kPrec)}, IETConvention::AsWritten, kPrec);
    for (double x : {0.0, 0.3, 0.99})
        EXPECT_NEAR(iet_apply(t, bf(x)).to_double(), x, 1e-12);
}

TEST(IETNew, FourIntervalFromPiLengths) {
    auto t = example_iet4();
    EXPECT_EQ(t.k, 4);
    // T(0) = s'_1 (x = 0 lies in the first subinterval)
    EXPECT_EQ(iet_apply(t, BigFloat(kPrec)).cmp(t.s_prime[0]), 0);
}

TEST(IETNew, Errors) {
    BigFloat half = BigFloat::pow2(-1, kPrec);
    EXPECT_THROW(iet_new({1, 1}, {half, half}), InvalidPermutation);
    EXPECT_THROW(iet_new({2, 3}, {half, half}), InvalidPermutation);
    EXPECT_THROW(iet_new({2, 1}, {half}), InvalidPermutation);
    EXPECT_THROW(iet_new({2, 1}, {half, -half}), NonpositiveLength);
    EXPECT_THROW(iet_new({2, 1}, {half, half + half}), LengthsNotNormalized);
}

TEST(IETApply, RotationHasTwoDifferences) {
    // perm (2,1): T(x) - x takes exactly two values, differing by 1.
    auto t = kronecker_iet(ThetaSpec::golden(), IETConvention::AsWritten, kPrec);
    BigFloat lo = BigFloat::from_ui(1, kPrec), hi = -lo;
    BigFloat close = BigFloat::pow2(-100, kPrec);
    for (int i = 0; i < 1000; ++i) {
        BigFloat x = BigFloat::from_ui(i, kPrec) / BigFloat::from_ui(1000, kPrec);
        BigFloat d = iet_apply(t, x) - x;
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    }
    for (int i = 0; i < 1000; ++i) {
        BigFloat x = BigFloat::from_ui(i, kPrec) / BigFloat::from_ui(1000, kPrec);
        BigFloat d = iet_apply(t, x) - x;
        EXPECT_TRUE((d - lo).abs() < close || (d - hi).abs() < close);
    }
    EXPECT_TRUE((hi - lo - BigFloat::from_ui(1, kPrec)).abs() < close);
}

TEST(IETApply, DomainChecks) {
    auto t = kronecker_iet(ThetaSpec::golden(), IETConvention::AsWritten, kPrec);
    EXPECT_THROW(iet_apply(t, -bf(0.1)), OutOfDomain);
    EXPECT_THROW(iet_apply(t, BigFloat::from_ui(1, kPrec)), OutOfDomain);
}

TEST(IETApply, BijectionOnGridAndMeasurePreserving) {
    for (const auto& t : {example_iet4(), example_iet6()}) {
        // Image subintervals [s'_j, s'_j + lambda_j) partition [0,1).
        std::vector<std::pair<double, double>> spans;
        for (int j = 0; j < t.k; ++j)
            spans.push_back({t.s_prime[j].to_double(),
                             (t.s_prime[j] + t.domain_lengths[j]).to_double()});
        std::sort(spans.begin(), spans.end());
        EXPECT_NEAR(spans.front().first, 0.0, 1e-12);
        EXPECT_NEAR(spans.back().second, 1.0, 1e-12);
        for (size_t j = 0; j + 1 < spans.size(); ++j)
            EXPECT_NEAR(spans[j].second, spans[j + 1].first, 1e-12);

        // Images of a uniform grid are pairwise distinct.
        std::vector<double> img;
        for (int i = 0; i < 997; ++i) {
            BigFloat x = BigFloat::from_ui(i, kPrec) / BigFloat::from_ui(997, kPrec);
            img.push_back(iet_apply(t, x).to_double());
        }
        std::sort(img.begin(), img.end());
        for (size_t i = 0; i + 1 < img.size(); ++i)
            EXPECT_GT(img[i + 1] - img[i], 1e-9);
    }
}

TEST(Odometer, KnownValues) {
    EXPECT_EQ(odometer_apply(Dyadic::integer(0)), Dyadic::make(1, 1));  // 0 -> 1/2
    EXPECT_EQ(odometer_apply(Dyadic::make(3, 2)), Dyadic::make(1, 3));  // 3/4 -> 1/8
    EXPECT_EQ(odometer_apply(Dyadic::make(1, 1)), Dyadic::make(1, 2));  // 1/2 -> 1/4
    EXPECT_THROW(odometer_apply(Dyadic::integer(1)), OutOfDomain);
    EXPECT_THROW(odometer_apply(Dyadic::make(-1, 1)), OutOfDomain);
}

TEST(Odometer, OrbitIsVdcPrefix) {
    auto orbit = odometer_orbit(Dyadic::integer(0), 64);
    ASSERT_TRUE(orbit.distinct_ok);
    auto seq = vdc_prefix(2, 64);
    for (int i = 0; i < 64; ++i)
        EXPECT_EQ(orbit.points[i].rat(), seq.terms[i].rat()) << "i=" << i;
}

TEST(Orbit, IdentityRevisitsImmediately) {
    auto t = iet_new({1}, {BigFloat::from_ui(1, kPrec)}, IETConvention::AsWritten, kPrec);
    auto rep = iet_orbit(t, BigFloat(kPrec), 5);
    ASSERT_TRUE(rep.revisit_index.has_value());
    EXPECT_EQ(*rep.revisit_index, 1);
    EXPECT_FALSE(rep.distinct_ok);
    EXPECT_EQ(static_cast<int>(rep.points.size()), 2);
}

TEST(Orbit, TransposedGoldenMatchesKronecker) {
    auto t = kronecker_iet(ThetaSpec::golden(), IETConvention::Transposed, kPrec);
    auto rep = iet_orbit(t, BigFloat(kPrec), 8);
    ASSERT_TRUE(rep.distinct_ok);
    auto seq = kronecker_prefix({ThetaSpec::golden(), kPrec}, 8);
    BigFloat tol = BigFloat::pow2(-60, kPrec);
    for (int i = 0; i < 8; ++i)
        EXPECT_TRUE((rep.points[i].as_bigfloat(kPrec) - seq.terms[i].real()).abs() < tol);
}

TEST(VerifyEvolution, VdcAgainstOdometerExact) {
    EXPECT_TRUE(verify_evolution_odometer(vdc_prefix(2, 64)));
    EXPECT_TRUE(verify_evolution_odometer(vdc_prefix(2, 1000))); // non-power-of-4 length too
    EXPECT_FALSE(verify_evolution_odometer(kronecker_prefix({ThetaSpec::golden(), kPrec}, 8)));
}

TEST(VerifyEvolution, KroneckerConventions) {
    auto seq = kronecker_prefix({ThetaSpec::golden(), kPrec}, 100);
    BigFloat tol = BigFloat::pow2(-64, kPrec);
    EXPECT_TRUE(verify_evolution(seq, kronecker_iet(ThetaSpec::golden(),
                                                    IETConvention::Transposed, kPrec), tol));
    // The formula applied verbatim rotates the other way.
    EXPECT_FALSE(verify_evolution(seq, kronecker_iet(ThetaSpec::golden(),
                                                     IETConvention::AsWritten, kPrec), tol));
    // Identity IET does not evolve a Kronecker sequence.
    auto ident = iet_new({1}, {BigFloat::from_ui(1, kPrec)}, IETConvention::AsWritten, kPrec);
    EXPECT_FALSE(verify_evolution(seq, ident, tol));
}

TEST(Orbit, TwoIntervalGoldenGraphEqualsKroneckerGraph) {
    auto t = kronecker_iet(ThetaSpec::golden(), IETConvention::Transposed, kPrec);
    auto rep = iet_orbit(t, BigFloat(kPrec), 100);
    ASSERT_TRUE(rep.distinct_ok);
    auto iet_graph = build_graph(make_sorted_sequence(std::move(rep.points)));
    auto kron_graph = build_graph(kronecker_prefix({ThetaSpec::golden(), kPrec}, 100));
    EXPECT_TRUE(is_same_labeled_graph(MultiGraph::from_sequence_graph(iet_graph),
                                      MultiGraph::from_sequence_graph(kron_graph)));
}

TEST(GapCount, AtMostKPlusTwoForExampleIETs) {
    for (const auto& [t, k] : {std::pair{example_iet4(), 4}, {example_iet6(), 6}}) {
        auto rep = iet_orbit(t, BigFloat(kPrec), 1000);
        ASSERT_TRUE(rep.distinct_ok);
        auto seq = make_sorted_sequence(std::move(rep.points));
        int count = gap_profile(seq).distinct_count;
        EXPECT_LE(count, k + 2) << "k=" << k;
        RecordProperty("observed_gap_count", count);
    }
}

TEST(SpecFile, ParseWithConventionAndRest) {
    auto t = iet_parse_spec(
        "# comment line\n"
        "perm: 2 1\n"
        "lengths: 0.25, rest\n"
        "convention: transposed\n",
        kPrec);
    EXPECT_EQ(t.k, 2);
    EXPECT_EQ(t.convention, IETConvention::Transposed);
    EXPECT_NEAR(t.lengths[1].to_double(), 0.75, 1e-12);
}

TEST(SpecFile, Errors) {
    EXPECT_THROW(iet_parse_spec("lengths: 1\n"), ParseError);
    EXPECT_THROW(iet_parse_spec("perm: 1\n"), ParseError);
    EXPECT_THROW(iet_parse_spec("perm: 1\nlengths: rest, rest\n"), ParseError);
    EXPECT_THROW(iet_parse_spec("perm: 1\nlengths: 1\nconvention: sideways\n"), ParseError);
    EXPECT_THROW(iet_parse_spec("perm: 1\nlengths: 2*\n"), ParseError);
    EXPECT_THROW(iet_parse_spec("perm: 1\nlengths: tau\n"), ParseError);
}

TEST(SpecFile, ExpressionEvaluation) {
    EXPECT_NEAR(eval_length_expression("1/(2*pi)", kPrec).to_double(), 0.15915494309, 1e-10);
    EXPECT_NEAR(eval_length_expression("(1+2)*0.1 - 0.05", kPrec).to_double(), 0.25, 1e-12);
    EXPECT_NEAR(eval_length_expression("-(-0.5)", kPrec).to_double(), 0.5, 1e-12);
}

TEST(SpecFile, PiLengthExamplesRoundTrip) {
    auto t4 = example_iet4();
    BigFloat sum(kPrec);
    for (const auto& l : t4.lengths) sum = sum + l;
    EXPECT_NEAR(sum.to_double(), 1.0, 1e-30);
    EXPECT_NEAR(t4.lengths[0].to_double(), 0.15915494309, 1e-10);

    auto t6 = example_iet6();
    EXPECT_EQ(t6.k, 6);
    EXPECT_NEAR(t6.lengths[0].to_double(), 0.31830988618, 1e-10);
}
