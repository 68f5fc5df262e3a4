#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seqgraph/bigfloat.hpp"
#include "seqgraph/bits.hpp"
#include "seqgraph/errors.hpp"

namespace seqgraph {

/// A sequence term: exact rational (van der Corput, odometer orbits) or
/// fixed-precision real (Kronecker, general IET orbits).
class SeqValue {
public:
    static SeqValue rational(mpq_class q) { return SeqValue(std::move(q)); }
    static SeqValue real(BigFloat x) { return SeqValue(std::move(x)); }

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    const BigFloat& real() const { return std::get<BigFloat>(v_); }

    /// Exact three-way comparison; mixed kinds compare exactly via mpfr_cmp_q.
    int cmp(const SeqValue& o) const {
        if (is_rational() && o.is_rational())
            return ::cmp(rat(), o.rat());
        if (!is_rational() && !o.is_rational())
            return real().cmp(o.real());
        if (is_rational()) return -o.real().cmp_rational(rat());
        return real().cmp_rational(o.rat());
    }

    BigFloat as_bigfloat(mpfr_prec_t prec) const {
        if (is_rational()) return BigFloat::from_rational(rat(), prec);
        return real();
    }

    double to_double() const {
        return is_rational() ? rat().get_d() : real().to_double();
    }

private:
    explicit SeqValue(mpq_class q) : v_(std::move(q)) {}
    explicit SeqValue(BigFloat x) : v_(std::move(x)) {}
    std::variant<mpq_class, BigFloat> v_;
};

/// First N terms of a sequence together with the sorting permutation pi
/// (terms[pi[0]] < ... < terms[pi[N-1]]) and its inverse.
struct SortedSequence {
    std::vector<SeqValue> terms;
    std::vector<int> pi;
    std::vector<int> pi_inv;

    int size() const { return static_cast<int>(terms.size()); }
};

/// How the Kronecker parameter theta is specified; re-evaluated whenever the
/// working precision is raised, so the source survives re-computation.
struct ThetaSpec {
    enum class Kind { Golden, Sqrt2, SqrtUi, Decimal };
    Kind kind = Kind::Golden;
    unsigned long sqrt_arg = 0; // Kind::SqrtUi
    std::string decimal;        // Kind::Decimal

    static ThetaSpec golden() { return {Kind::Golden, 0, {}}; }
    static ThetaSpec sqrt2() { return {Kind::Sqrt2, 0, {}}; }
    static ThetaSpec sqrt_ui(unsigned long n) { return {Kind::SqrtUi, n, {}}; }
    static ThetaSpec decimal_str(std::string s) { return {Kind::Decimal, 0, std::move(s)}; }

    /// Accepts the named constants "golden" / "sqrt2" or a decimal literal.
    static ThetaSpec parse(const std::string& text) {
        if (text == "golden") return golden();
        if (text == "sqrt2") return sqrt2();
        BigFloat::parse(text, 64); // validates the literal
        return decimal_str(text);
    }

    BigFloat eval(mpfr_prec_t prec) const {
        switch (kind) {
            case Kind::Golden: return BigFloat::golden(prec);
            case Kind::Sqrt2: return BigFloat::sqrt_ui(2, prec);
            case Kind::SqrtUi: return BigFloat::sqrt_ui(sqrt_arg, prec);
            case Kind::Decimal: return BigFloat::parse(decimal, prec);
        }
        throw InvalidParam("bad ThetaSpec");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Golden: return "golden";
            case Kind::Sqrt2: return "sqrt2";
            case Kind::SqrtUi: return "sqrt(" + std::to_string(sqrt_arg) + ")";
            case Kind::Decimal: return decimal;
        }
        return "?";
    }
};

struct KroneckerParams {
    ThetaSpec theta;
    int precision_bits = 128;
};

inline int ceil_log2(std::uint64_t n) {
    int b = 0;
    while ((std::uint64_t{1} << b) < n) ++b;
    return b;
}

/// Precision actually used for a Kronecker prefix of length N: the requested
/// bits raised to at least 64 + 2*ceil(log2 N).
inline int kronecker_effective_precision(int requested_bits, int n) {
    return std::max({requested_bits, 64, 64 + 2 * ceil_log2(static_cast<std::uint64_t>(n))});
}

/// Sorting permutation of pairwise-distinct terms; returns (pi, pi_inv).
inline std::pair<std::vector<int>, std::vector<int>>
sort_permutation(std::span<const SeqValue> terms) {
    const int n = static_cast<int>(terms.size());
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::stable_sort(pi.begin(), pi.end(),
                     [&](int a, int b) { return terms[a].cmp(terms[b]) < 0; });
    for (int i = 0; i + 1 < n; ++i)
        if (terms[pi[i]].cmp(terms[pi[i + 1]]) == 0)
            throw DuplicateValues("terms " + std::to_string(pi[i]) + " and " +
                                  std::to_string(pi[i + 1]) + " compare equal");
    std::vector<int> pi_inv(n);
    for (int i = 0; i < n; ++i) pi_inv[pi[i]] = i;
    return {std::move(pi), std::move(pi_inv)};
}

inline SortedSequence make_sorted_sequence(std::vector<SeqValue> terms) {
    auto [pi, pi_inv] = sort_permutation(terms);
    return SortedSequence{std::move(terms), std::move(pi), std::move(pi_inv)};
}

/// frac(n*theta) for n = 0..N-1 at a precision high enough that the computed
/// sort order is the true one, or PrecisionInsufficient if the minimal gap
/// guard 2^(-p/2) is violated.
inline SortedSequence kronecker_prefix(const KroneckerParams& params, int n) {
    if (n < 1) throw InvalidParam("kronecker_prefix: N must be >= 1");
    const int p = kronecker_effective_precision(params.precision_bits, n);
    const BigFloat theta = params.theta.eval(p);

    std::vector<SeqValue> terms;
    terms.reserve(n);
    for (int i = 0; i < n; ++i)
        terms.push_back(SeqValue::real(theta.mul_ui(static_cast<unsigned long>(i)).frac()));

    SortedSequence seq;
    try {
        seq = make_sorted_sequence(std::move(terms));
    } catch (const DuplicateValues&) {
        throw PrecisionInsufficient("two Kronecker terms compare equal at " +
                                    std::to_string(p) + " bits");
    }
    const BigFloat guard = BigFloat::pow2(-(p / 2), p);
    for (int i = 0; i + 1 < n; ++i) {
        BigFloat gap = seq.terms[seq.pi[i + 1]].real() - seq.terms[seq.pi[i]].real();
        if (!(gap > guard))
            throw PrecisionInsufficient("minimal gap below 2^-" + std::to_string(p / 2) +
                                        " at N=" + std::to_string(n));
    }
    return seq;
}

/// Base-b radical inverse of n as an exact rational.
inline mpq_class radical_inverse(int base, std::uint64_t n) {
    mpz_class num = 0, den = 1;
    while (n > 0) {
        num = num * base + static_cast<unsigned long>(n % base);
        den *= base;
        n /= base;
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// First N terms of the base-b van der Corput sequence, exact.
inline SortedSequence vdc_prefix(int base, int n) {
    if (base < 2) throw InvalidParam("vdc_prefix: base must be >= 2");
    if (n < 1) throw InvalidParam("vdc_prefix: N must be >= 1");
    std::vector<SeqValue> terms;
    terms.reserve(n);
    for (int i = 0; i < n; ++i)
        terms.push_back(SeqValue::rational(radical_inverse(base, i)));
    return make_sorted_sequence(std::move(terms));
}

/// S(i) = pi(pi^-1(i) + 1 mod N): the vertex after i in sorted order.
inline int successor(const SortedSequence& seq, int i) {
    const int n = seq.size();
    if (i < 0 || i >= n) throw OutOfRange("successor: vertex out of range");
    return seq.pi[(seq.pi_inv[i] + 1) % n];
}

inline int predecessor(const SortedSequence& seq, int i) {
    const int n = seq.size();
    if (i < 0 || i >= n) throw OutOfRange("predecessor: vertex out of range");
    return seq.pi[(seq.pi_inv[i] + n - 1) % n];
}

/// Successor in the 4^m-th binary van der Corput graph via binary addition
/// "from the left": b(S(i)) = r(r(b(i)) + 1 mod 4^m) on 2m-bit strings.
inline std::uint64_t vdc_successor_bits(std::uint64_t i, int m) {
    if (m < 1 || m > 30) throw OutOfRange("vdc_successor_bits: m out of range");
    const std::uint64_t n = std::uint64_t{1} << (2 * m);
    if (i >= n) throw OutOfRange("vdc_successor_bits: i >= 4^m");
    std::uint64_t rev = reverse_bits(i, 2 * m);
    rev = (rev + 1) & (n - 1);
    return reverse_bits(rev, 2 * m);
}

} // namespace seqgraph
