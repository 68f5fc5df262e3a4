#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "seqgraph/bigfloat.hpp"
#include "seqgraph/errors.hpp"

namespace seqgraph {

/// Exact dyadic rational num / 2^exp with exp >= 0. Kept normalized (num odd
/// or zero). Magnitudes stay tiny here (odometer values and embedding
/// coordinates), so int64 never comes close to overflow.
struct Dyadic {
    std::int64_t num = 0;
    int exp = 0;

    Dyadic() = default;

    static Dyadic make(std::int64_t n, int e) {
        assert(e >= 0 && e < 62);
        while (e > 0 && n % 2 == 0) { n /= 2; --e; }
        if (n == 0) e = 0;
        return Dyadic{n, e};
    }

    static Dyadic integer(std::int64_t n) { return Dyadic{n, 0}; }

    /// 2^e for e of either sign (e < 0 gives a fraction).
    static Dyadic power_of_two(int e) {
        return e >= 0 ? Dyadic{std::int64_t{1} << e, 0} : Dyadic{1, -e};
    }

private:
    Dyadic(std::int64_t n, int e) : num(n), exp(e) {}

public:
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        int e = std::max(a.exp, b.exp);
        return make((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
    }

    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        int e = std::max(a.exp, b.exp);
        return make((a.num << (e - a.exp)) - (b.num << (e - b.exp)), e);
    }

    Dyadic operator-() const { return Dyadic{-num, exp}; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.exp == b.exp;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        int e = std::max(a.exp, b.exp);
        return (a.num << (e - a.exp)) < (b.num << (e - b.exp));
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    bool is_integer() const { return exp == 0; }

    /// Value scaled by 2^k; requires k >= exp so the result is an integer.
    std::int64_t scaled(int k) const {
        assert(k >= exp);
        return num << (k - exp);
    }

    double to_double() const { return std::ldexp(double(num), -exp); }

    mpq_class to_mpq() const {
        mpq_class q(num, std::int64_t{1} << exp);
        q.canonicalize();
        return q;
    }

    BigFloat to_bigfloat(mpfr_prec_t prec) const {
        return BigFloat::from_si(num, prec) * BigFloat::pow2(-exp, prec);
    }

    /// Exact conversion; empty when q is not dyadic or too wide for int64.
    static std::optional<Dyadic> from_mpq(const mpq_class& q) {
        mpq_class c = q;
        c.canonicalize();
        const mpz_class& den = c.get_den();
        if (den <= 0) return std::nullopt;
        size_t bit = mpz_scan1(den.get_mpz_t(), 0);
        if (mpz_sizeinbase(den.get_mpz_t(), 2) != bit + 1) return std::nullopt; // den not 2^k
        if (bit >= 62 || !c.get_num().fits_slong_p()) return std::nullopt;
        return make(c.get_num().get_si(), static_cast<int>(bit));
    }

    std::string to_string() const {
        if (exp == 0) return std::to_string(num);
        return std::to_string(num) + "/2^" + std::to_string(exp);
    }
};

/// One step of the dyadic odometer ("add 1 from the left" in binary):
/// with n = number of leading ones in the binary fraction of x,
/// T(x) = x - (1 - 2^-n) + 2^-(n+1).
inline Dyadic odometer_apply(const Dyadic& x) {
    if (x.num < 0 || x >= Dyadic::integer(1))
        throw OutOfDomain("odometer input must lie in [0,1)");
    int n = 0;
    while (n < x.exp && ((x.num >> (x.exp - 1 - n)) & 1) != 0) ++n;
    return x - Dyadic::integer(1) + Dyadic::power_of_two(-n) + Dyadic::power_of_two(-(n + 1));
}

} // namespace seqgraph
