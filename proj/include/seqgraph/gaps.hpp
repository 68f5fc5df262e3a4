#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "seqgraph/errors.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/sequence.hpp"

namespace seqgraph {

/// Maximal run of indices sharing one successor gap value S(i) - i.
struct GapRun {
    int value;
    int lo, hi; // index range [lo, hi)
};

struct GapProfile {
    std::vector<GapRun> gaps; // runs in index order; they partition {0..N-1}
    int distinct_count = 0;   // number of distinct gap values
    int pi1 = 0;
    int piN1 = 0;
};

namespace detail {

/// Ravenstein's case formula: gaps must be pi(1) on [0, N-pi1),
/// -pi(N-1) on [piN1, N), and pi1 - piN1 on [N-pi1, piN1).
template <typename SuccFn>
bool three_gap_cases_hold(SuccFn succ, int n, int pi1, int piN1) {
    for (int i = 0; i < n; ++i) {
        const int gap = succ(i) - i;
        bool covered = false;
        if (i < n - pi1) {
            if (gap != pi1) return false;
            covered = true;
        }
        if (i >= piN1) {
            if (gap != -piN1) return false;
            covered = true;
        }
        if (i >= n - pi1 && i < piN1) {
            if (gap != pi1 - piN1) return false;
            covered = true;
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace detail

/// Groups S(i) - i by value into maximal index runs.
inline GapProfile gap_profile(const SortedSequence& seq) {
    const int n = seq.size();
    if (n < 2) throw InvalidParam("gap_profile: N must be >= 2");
    GapProfile prof;
    prof.pi1 = seq.pi[1];
    prof.piN1 = seq.pi[n - 1];
    std::map<int, int> value_counts;
    int run_lo = 0;
    int run_value = successor(seq, 0) - 0;
    value_counts[run_value]++;
    for (int i = 1; i < n; ++i) {
        const int gap = successor(seq, i) - i;
        value_counts[gap]++;
        if (gap != run_value) {
            prof.gaps.push_back({run_value, run_lo, i});
            run_lo = i;
            run_value = gap;
        }
    }
    prof.gaps.push_back({run_value, run_lo, n});
    prof.distinct_count = static_cast<int>(value_counts.size());
    return prof;
}

inline bool verify_three_gap(const SortedSequence& seq) {
    const int n = seq.size();
    if (n < 2) throw InvalidParam("verify_three_gap: N must be >= 2");
    return detail::three_gap_cases_hold([&](int i) { return successor(seq, i); }, n,
                                        seq.pi[1], seq.pi[n - 1]);
}

inline bool is_nice_N(const SortedSequence& seq) {
    const int n = seq.size();
    if (n < 2) throw InvalidParam("is_nice_N: N must be >= 2");
    return n == seq.pi[1] + seq.pi[n - 1];
}

/// Connection set of a circulant sequence graph, when one exists.
struct ConnectionSet {
    int c;           // Cpi step: the set is {1, c}
    bool degenerate; // c = +-1 mod N: the two generators coincide
};

/// {1, pi(1)} iff S(i) = i + pi(1) mod N for every i; empty otherwise.
inline std::optional<ConnectionSet> circulant_check(const SequenceGraph& g,
                                                    const SortedSequence& seq) {
    const int n = g.n;
    if (n < 2 || seq.size() != n) return std::nullopt;
    const int c = seq.pi[1];
    for (int i = 0; i < n; ++i) {
        int diff = successor(seq, i) - i;
        if (((diff % n) + n) % n != c % n) return std::nullopt;
    }
    return ConnectionSet{c, c % n == 1 % n || (c + 1) % n == 0};
}

/// Incremental three-gap scanner over a Kronecker sequence: terms are
/// inserted one at a time into the sorted cyclic order, so successor data,
/// pi(1), pi(N-1) and the distinct-gap census stay current at every prefix
/// length. Re-sorting per N would make the desk-scale sweeps quadratic in
/// MPFR comparisons.
class ThreeGapScanner {
public:
    explicit ThreeGapScanner(const ThetaSpec& theta, int n_max, int precision_bits = 128)
        : n_max_(n_max) {
        if (n_max < 1) throw InvalidParam("ThreeGapScanner: N_max must be >= 1");
        prec_ = kronecker_effective_precision(precision_bits, n_max);
        theta_ = theta.eval(prec_);
        guard_ = BigFloat::pow2(-(prec_ / 2), prec_);
        terms_.reserve(n_max);
        succ_.reserve(n_max);
        push_next();
    }

    int n() const { return static_cast<int>(terms_.size()); }
    int precision() const { return prec_; }

    /// Extends to the next prefix length; throws PrecisionInsufficient if the
    /// new term lands within the gap guard of an existing one.
    void push_next() {
        const int idx = n();
        if (idx >= n_max_) throw InvalidParam("ThreeGapScanner: past N_max");
        BigFloat value = theta_.mul_ui(static_cast<unsigned long>(idx)).frac();
        auto pos = std::lower_bound(order_.begin(), order_.end(), value,
                                    [&](int a, const BigFloat& v) { return terms_[a] < v; });
        const int r = static_cast<int>(pos - order_.begin());
        const int sz = static_cast<int>(order_.size());
        if (sz > 0) {
            if (r < sz && !((terms_[order_[r]] - value) > guard_))
                throw PrecisionInsufficient("gap guard violated at N=" + std::to_string(idx + 1));
            if (r > 0 && !((value - terms_[order_[r - 1]]) > guard_))
                throw PrecisionInsufficient("gap guard violated at N=" + std::to_string(idx + 1));
        }
        terms_.push_back(std::move(value));
        succ_.push_back(0);
        if (sz == 0) {
            succ_[idx] = idx;
            order_.push_back(idx);
            return;
        }
        const int before = order_[(r - 1 + sz) % sz];
        const int after = order_[r % sz];
        bump_gap(succ_[before] - before, -1);
        succ_[before] = idx;
        succ_[idx] = after;
        bump_gap(idx - before, +1);
        bump_gap(after - idx, +1);
        order_.insert(order_.begin() + r, idx);
    }

    int pi1() const { return order_[1]; }
    int piN1() const { return order_.back(); }
    int successor_of(int i) const { return succ_[i]; }
    int distinct_gap_count() const { return static_cast<int>(gap_counts_.size()); }
    bool nice() const { return n() >= 2 && n() == pi1() + piN1(); }

    bool three_gap_cases_hold() const {
        return detail::three_gap_cases_hold([&](int i) { return succ_[i]; }, n(), pi1(), piN1());
    }

private:
    void bump_gap(int value, int delta) {
        auto it = gap_counts_.find(value);
        if (it == gap_counts_.end()) {
            if (delta > 0) gap_counts_[value] = delta;
            return;
        }
        it->second += delta;
        if (it->second <= 0) gap_counts_.erase(it);
    }

    int n_max_;
    int prec_;
    BigFloat theta_{128};
    BigFloat guard_{128};
    std::vector<BigFloat> terms_;
    std::vector<int> order_; // indices in ascending value order
    std::vector<int> succ_;  // S(i) in the current prefix
    std::map<int, int> gap_counts_;
};

/// All N <= N_max with N = pi(1) + pi(N-1), ascending.
inline std::vector<int> nice_N_scan(const ThetaSpec& theta, int n_max,
                                    int precision_bits = 128) {
    if (n_max < 2) throw InvalidParam("nice_N_scan: N_max must be >= 2");
    ThreeGapScanner scan(theta, n_max, precision_bits);
    std::vector<int> out;
    while (scan.n() < n_max) {
        scan.push_next();
        if (scan.nice()) out.push_back(scan.n());
    }
    return out;
}

} // namespace seqgraph
