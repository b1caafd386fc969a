#ifndef SVDREF_MPREAL_HPP
#define SVDREF_MPREAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace svdref {

using prec_t = mpfr_prec_t;

inline constexpr prec_t kMinPrec = 53;

// Arbitrary-precision real backed by a single mpfr_t.
//
// Every value carries its own precision. Binary operations round once,
// into a result whose precision is the max of the operand precisions.
// Copies and assignments preserve the source precision exactly.
class MpReal {
public:
    MpReal() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }

    explicit MpReal(prec_t prec) {
        mpfr_init2(v_, prec < kMinPrec ? kMinPrec : prec);
        mpfr_set_zero(v_, 1);
    }

    MpReal(double d, prec_t prec) {
        mpfr_init2(v_, prec < kMinPrec ? kMinPrec : prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }

    MpReal(const MpReal& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);  // exact: same precision
    }

    MpReal(MpReal&& o) noexcept {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }

    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~MpReal() { mpfr_clear(v_); }

    static MpReal from_si(long n, prec_t prec) {
        MpReal r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    static MpReal from_double(double d, prec_t prec) { return MpReal(d, prec); }

    // Parses a decimal string, rounding once into `prec` bits.
    static MpReal from_str(const std::string& s, prec_t prec) {
        MpReal r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    // 2^e, exact.
    static MpReal pow2(long e, prec_t prec) {
        MpReal r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    static MpReal pos_inf(prec_t prec) {
        MpReal r(prec);
        mpfr_set_inf(r.v_, 1);
        return r;
    }

    prec_t prec() const { return mpfr_get_prec(v_); }

    // Re-rounds the value into `prec` bits. Raising precision is exact.
    MpReal round_to(prec_t prec) const {
        MpReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string(int significant_digits = 20) const;

    friend MpReal operator+(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator-(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator*(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator/(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal operator-(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    MpReal& operator+=(const MpReal& b) { *this = *this + b; return *this; }
    MpReal& operator-=(const MpReal& b) { *this = *this - b; return *this; }
    MpReal& operator*=(const MpReal& b) { *this = *this * b; return *this; }
    MpReal& operator/=(const MpReal& b) { *this = *this / b; return *this; }

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }

    friend bool operator<(const MpReal& a, double d) { return mpfr_cmp_d(a.v_, d) < 0; }
    friend bool operator>(const MpReal& a, double d) { return mpfr_cmp_d(a.v_, d) > 0; }
    friend bool operator<=(const MpReal& a, double d) { return mpfr_cmp_d(a.v_, d) <= 0; }
    friend bool operator>=(const MpReal& a, double d) { return mpfr_cmp_d(a.v_, d) >= 0; }
    friend bool operator==(const MpReal& a, double d) { return mpfr_cmp_d(a.v_, d) == 0; }

    friend MpReal abs(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal sqrt(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // |a + bi| without overflow, rounded at max precision of the parts.
    friend MpReal hypot(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal pow(const MpReal& a, const MpReal& e) {
        MpReal r(out_prec(a, e));
        mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal log2(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_log2(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal floor(const MpReal& a) {
        MpReal r(a.prec());
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend MpReal max(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MpReal min(const MpReal& a, const MpReal& b) {
        MpReal r(out_prec(a, b));
        mpfr_min(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    // Exact scaling by 2^e.
    MpReal mul_2exp(long e) const {
        MpReal r(prec());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static prec_t out_prec(const MpReal& a, const MpReal& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

inline MpReal operator*(double d, const MpReal& a) { return MpReal(d, a.prec()) * a; }
inline MpReal operator*(const MpReal& a, double d) { return a * MpReal(d, a.prec()); }
inline MpReal operator/(const MpReal& a, double d) { return a / MpReal(d, a.prec()); }
inline MpReal operator/(double d, const MpReal& a) { return MpReal(d, a.prec()) / a; }
inline MpReal operator+(const MpReal& a, double d) { return a + MpReal(d, a.prec()); }
inline MpReal operator-(const MpReal& a, double d) { return a - MpReal(d, a.prec()); }
inline MpReal operator-(double d, const MpReal& a) { return MpReal(d, a.prec()) - a; }

}  // namespace svdref

#endif
