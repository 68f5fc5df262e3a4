#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "seqgraph/bigfloat.hpp"
#include "seqgraph/dyadic.hpp"
#include "seqgraph/errors.hpp"
#include "seqgraph/sequence.hpp"

namespace seqgraph {

/// Which row of the permutation the supplied lengths refer to.
/// AsWritten: lengths[j] is the length of domain subinterval j and interval j
/// moves to position perm[j] (the formula s'_j = sum_{l < perm[j]}
/// lengths[perm^-1(l)] taken verbatim). Transposed: lengths[j] is the length
/// of the *image* slot j, so domain interval j has length lengths[perm[j]].
/// The two conventions coincide exactly when perm is an involution applied to
/// equal lengths; for perm=(2,1) with lengths (a, 1-a) they give rotation by
/// -a and +a respectively.
enum class IETConvention { AsWritten, Transposed };

inline const char* convention_name(IETConvention c) {
    return c == IETConvention::AsWritten ? "as-written" : "transposed";
}

/// Interval exchange transformation on [0,1): k subintervals rearranged by a
/// permutation, with precomputed breakpoints s_j and image offsets s'_j.
struct IETSpec {
    int k = 0;
    std::vector<int> perm;            // 1-based target positions
    std::vector<BigFloat> lengths;    // as supplied
    IETConvention convention = IETConvention::AsWritten;
    std::vector<BigFloat> domain_lengths; // per-subinterval lengths after convention
    std::vector<BigFloat> s;          // s[j] = sum of domain lengths before j (0-based)
    std::vector<BigFloat> s_prime;    // image offset of subinterval j
    int precision = 128;
};

inline IETSpec iet_new(const std::vector<int>& perm, const std::vector<BigFloat>& lengths,
                       IETConvention convention = IETConvention::AsWritten,
                       int precision_bits = 128) {
    const int k = static_cast<int>(perm.size());
    if (k < 1 || lengths.size() != perm.size())
        throw InvalidPermutation("iet_new: perm and lengths must be nonempty and equal-sized");
    std::vector<bool> seen(k, false);
    for (int p : perm) {
        if (p < 1 || p > k || seen[p - 1])
            throw InvalidPermutation("iet_new: perm is not a bijection on {1..k}");
        seen[p - 1] = true;
    }

    IETSpec t;
    t.k = k;
    t.perm = perm;
    t.lengths = lengths;
    t.convention = convention;
    t.precision = precision_bits;

    const BigFloat zero(precision_bits);
    for (const auto& l : lengths)
        if (!(l > zero)) throw NonpositiveLength("iet_new: lengths must be positive");

    BigFloat sum(precision_bits);
    for (const auto& l : lengths) sum = sum + l;
    BigFloat one = BigFloat::from_ui(1, precision_bits);
    if ((sum - one).abs() > BigFloat::pow2(4 - precision_bits, precision_bits))
        throw LengthsNotNormalized("iet_new: lengths sum to " + sum.to_string());

    t.domain_lengths.reserve(k);
    for (int j = 0; j < k; ++j)
        t.domain_lengths.push_back(convention == IETConvention::AsWritten
                                       ? lengths[j]
                                       : lengths[perm[j] - 1]);

    std::vector<int> perm_inv(k);
    for (int j = 0; j < k; ++j) perm_inv[perm[j] - 1] = j + 1;

    // s_j = sum_{l<j} lambda_l ; s'_j = sum_{l<perm(j)} lambda_{perm^-1(l)}
    t.s.assign(k, zero);
    for (int j = 1; j < k; ++j) t.s[j] = t.s[j - 1] + t.domain_lengths[j - 1];
    t.s_prime.assign(k, zero);
    for (int j = 0; j < k; ++j) {
        BigFloat acc(precision_bits);
        for (int l = 1; l < perm[j]; ++l)
            acc = acc + t.domain_lengths[perm_inv[l - 1] - 1];
        t.s_prime[j] = acc;
    }
    return t;
}

/// T(x) = x - s_j + s'_j for the unique j with x in [s_j, s_{j+1}).
inline BigFloat iet_apply(const IETSpec& t, const BigFloat& x) {
    const BigFloat zero(t.precision);
    const BigFloat one = BigFloat::from_ui(1, t.precision);
    if (x < zero || x >= one) throw OutOfDomain("iet_apply: x outside [0,1)");
    int j = t.k - 1;
    while (j > 0 && x < t.s[j]) --j;
    return x - t.s[j] + t.s_prime[j];
}

/// Orbit of an interval exchange (or the odometer), with detection of
/// revisits: points[i+1] = T(points[i]), stopping early if a new point lands
/// within `tolerance` of an earlier one.
struct OrbitReport {
    std::vector<SeqValue> points;
    std::optional<int> revisit_index;
    bool distinct_ok = true;
};

namespace detail {

template <typename ValueT, typename StepFn, typename CloseFn>
OrbitReport orbit_impl(ValueT x0, int n, StepFn step, CloseFn close,
                       SeqValue (*wrap)(const ValueT&)) {
    if (n < 1) throw InvalidParam("orbit: N must be >= 1");
    OrbitReport rep;
    std::vector<ValueT> pts;
    std::vector<int> order; // point indices sorted by value, for revisit lookup
    pts.reserve(n);
    pts.push_back(std::move(x0));
    order.push_back(0);
    for (int i = 1; i < n; ++i) {
        ValueT next = step(pts.back());
        auto pos = std::lower_bound(order.begin(), order.end(), next,
                                    [&](int a, const ValueT& v) { return pts[a] < v; });
        bool hit = (pos != order.end() && close(pts[*pos], next)) ||
                   (pos != order.begin() && close(pts[*(pos - 1)], next));
        pts.push_back(std::move(next));
        if (hit) {
            rep.revisit_index = i;
            rep.distinct_ok = false;
            break;
        }
        order.insert(pos, i);
    }
    rep.points.reserve(pts.size());
    for (const auto& p : pts) rep.points.push_back(wrap(p));
    return rep;
}

} // namespace detail

inline OrbitReport iet_orbit(const IETSpec& t, const BigFloat& x0, int n,
                             const BigFloat& tolerance) {
    return detail::orbit_impl<BigFloat>(
        x0, n, [&](const BigFloat& x) { return iet_apply(t, x); },
        [&](const BigFloat& a, const BigFloat& b) { return (a - b).abs() < tolerance; },
        +[](const BigFloat& v) { return SeqValue::real(v); });
}

inline OrbitReport iet_orbit(const IETSpec& t, const BigFloat& x0, int n) {
    return iet_orbit(t, x0, n, BigFloat::pow2(-(t.precision / 2), t.precision));
}

/// Odometer orbit in exact dyadic arithmetic; revisit means exact equality.
inline OrbitReport odometer_orbit(const Dyadic& x0, int n) {
    return detail::orbit_impl<Dyadic>(
        x0, n, [](const Dyadic& x) { return odometer_apply(x); },
        [](const Dyadic& a, const Dyadic& b) { return a == b; },
        +[](const Dyadic& v) { return SeqValue::rational(v.to_mpq()); });
}

/// True iff |T(a_i) - a_{i+1}| < tolerance for every consecutive pair.
inline bool verify_evolution(const SortedSequence& seq, const IETSpec& t,
                             const BigFloat& tolerance) {
    for (int i = 0; i + 1 < seq.size(); ++i) {
        BigFloat cur = seq.terms[i].as_bigfloat(t.precision);
        BigFloat next = seq.terms[i + 1].as_bigfloat(t.precision);
        if (!((iet_apply(t, cur) - next).abs() < tolerance)) return false;
    }
    return true;
}

/// Exact variant: the sequence must consist of dyadic rationals and evolve by
/// the odometer with equality, no tolerance.
inline bool verify_evolution_odometer(const SortedSequence& seq) {
    for (int i = 0; i + 1 < seq.size(); ++i) {
        if (!seq.terms[i].is_rational() || !seq.terms[i + 1].is_rational()) return false;
        auto cur = Dyadic::from_mpq(seq.terms[i].rat());
        auto next = Dyadic::from_mpq(seq.terms[i + 1].rat());
        if (!cur || !next) return false;
        if (odometer_apply(*cur) != *next) return false;
    }
    return true;
}

/// The 2-IET that evolves the Kronecker sequence for theta, perm (2,1) with
/// lengths (theta mod 1, 1 - theta mod 1). Under the Transposed convention
/// this is rotation by +frac(theta), matching a_{i+1} = a_i + theta mod 1.
inline IETSpec kronecker_iet(const ThetaSpec& theta, IETConvention convention,
                             int precision_bits = 128) {
    BigFloat alpha = theta.eval(precision_bits).frac();
    BigFloat one = BigFloat::from_ui(1, precision_bits);
    return iet_new({2, 1}, {alpha, one - alpha}, convention, precision_bits);
}

// --- IET spec text format ----------------------------------------------
//
//   # comment
//   perm: 3 1 4 2
//   lengths: 1/(2*pi), 1/(4*pi), 1/(3*pi), rest
//   convention: as-written        (optional; or "transposed")
//
// Length entries are arithmetic expressions over decimal literals and the
// constant `pi`, with + - * / and parentheses; `rest` (at most once) stands
// for 1 minus the other lengths.

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, mpfr_prec_t prec) : text_(text), prec_(prec) {}

    BigFloat parse() {
        BigFloat v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing characters in expression: '" + text_ + "'");
        return v;
    }

private:
    BigFloat expr() {
        BigFloat v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    BigFloat term() {
        BigFloat v = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    BigFloat factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('(')) {
            BigFloat v = expr();
            skip_ws();
            if (!eat(')')) throw ParseError("missing ')' in '" + text_ + "'");
            return v;
        }
        if (std::isalpha(peek())) {
            std::string name;
            while (std::isalpha(peek())) name += text_[pos_++];
            if (name == "pi") return BigFloat::pi(prec_);
            throw ParseError("unknown constant '" + name + "'");
        }
        size_t start = pos_;
        while (std::isdigit(peek()) || peek() == '.') ++pos_;
        if (pos_ == start) throw ParseError("expected a number in '" + text_ + "'");
        return BigFloat::parse(text_.substr(start, pos_ - start), prec_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    mpfr_prec_t prec_;
};

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_entries(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

} // namespace detail

inline BigFloat eval_length_expression(const std::string& text, mpfr_prec_t prec) {
    return detail::ExprParser(text, prec).parse();
}

/// Parses the IET spec text format described above.
inline IETSpec iet_parse_spec(const std::string& text, int precision_bits = 128) {
    std::vector<int> perm;
    std::vector<std::string> length_exprs;
    IETConvention convention = IETConvention::AsWritten;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = detail::trim(text.substr(pos, nl == std::string::npos
                                                             ? std::string::npos
                                                             : nl - pos));
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        if (line.empty() || line[0] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("IET spec: expected 'key: value', got '" + line + "'");
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "perm") {
            for (const auto& tok : detail::split_entries(value)) {
                for (size_t i = 0, j = 0; i <= tok.size(); ++i) {
                    if (i == tok.size() || std::isspace(static_cast<unsigned char>(tok[i]))) {
                        if (i > j) perm.push_back(std::stoi(tok.substr(j, i - j)));
                        j = i + 1;
                    }
                }
            }
        } else if (key == "lengths") {
            length_exprs = detail::split_entries(value);
        } else if (key == "convention") {
            if (value == "as-written") convention = IETConvention::AsWritten;
            else if (value == "transposed") convention = IETConvention::Transposed;
            else throw ParseError("IET spec: unknown convention '" + value + "'");
        } else {
            throw ParseError("IET spec: unknown key '" + key + "'");
        }
    }
    if (perm.empty()) throw ParseError("IET spec: missing 'perm'");
    if (length_exprs.empty()) throw ParseError("IET spec: missing 'lengths'");

    std::vector<BigFloat> lengths;
    std::optional<size_t> rest_at;
    BigFloat sum(precision_bits);
    for (size_t i = 0; i < length_exprs.size(); ++i) {
        if (length_exprs[i] == "rest") {
            if (rest_at) throw ParseError("IET spec: 'rest' may appear only once");
            rest_at = i;
            lengths.push_back(BigFloat(precision_bits));
            continue;
        }
        lengths.push_back(eval_length_expression(length_exprs[i], precision_bits));
        sum = sum + lengths.back();
    }
    if (rest_at) lengths[*rest_at] = BigFloat::from_ui(1, precision_bits) - sum;
    return iet_new(perm, lengths, convention, precision_bits);
}

} // namespace seqgraph
