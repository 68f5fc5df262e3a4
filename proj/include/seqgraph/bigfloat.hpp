#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <utility>

#include "seqgraph/errors.hpp"

namespace seqgraph {

/// Fixed-precision real number backed by MPFR. The precision is chosen at
/// construction and carried through arithmetic (results take the larger
/// operand precision, rounded to nearest).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat from_ui(unsigned long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui(r.v_, n, MPFR_RNDN);
        return r;
    }

    static BigFloat from_si(long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    /// Parses a base-10 literal. Throws ParseError on trailing garbage.
    static BigFloat parse(const std::string& text, mpfr_prec_t prec) {
        BigFloat r(prec);
        char* end = nullptr;
        int rc = mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
        (void)rc;
        if (end == text.c_str() || *end != '\0')
            throw ParseError("not a decimal number: '" + text + "'");
        return r;
    }

    /// 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    static BigFloat sqrt_ui(unsigned long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_sqrt_ui(r.v_, n, MPFR_RNDN);
        return r;
    }

    /// (1 + sqrt 5) / 2
    static BigFloat golden(mpfr_prec_t prec) {
        BigFloat r = sqrt_ui(5, prec);
        mpfr_add_ui(r.v_, r.v_, 1, MPFR_RNDN);
        mpfr_div_2ui(r.v_, r.v_, 1, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat frac() const {
        BigFloat r(precision());
        mpfr_frac(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat mul_ui(unsigned long n) const {
        BigFloat r(precision());
        mpfr_mul_ui(r.v_, v_, n, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

    /// Exact comparison against a rational.
    int cmp_rational(const mpq_class& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) != 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string(int digits = 20) const {
        char buf[256];
        mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
        return buf;
    }

private:
    mpfr_t v_;
};

} // namespace seqgraph
