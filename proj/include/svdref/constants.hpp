#ifndef SVDREF_CONSTANTS_HPP
#define SVDREF_CONSTANTS_HPP

#include "svdref/mpreal.hpp"

namespace svdref {

// Certification constants by order (the main theorem's table):
//   p = 1:  a = 2,   u0 = 0.0289, gamma1 = 6.1,  sigma = 1.67
//   p = 2:  a = 4/3, u0 = 0.046,  gamma1 = 9.41, sigma = 2.1
//   p >= 3: a = 4/3, u0 = 0.0297, gamma1 = 10.2, sigma = 2.62
// The exponent a is kept in rational form so powers can be computed with
// integer powers and roots only.
class OrderConstants {
public:
    explicit OrderConstants(unsigned p) : p_(p < 3 ? p : 3) {
        if (p < 1) throw Error("OrderConstants: p >= 1 required");
    }

    unsigned table_row() const { return p_; }
    // a as (num/den): 2/1 for p=1, 4/3 otherwise.
    unsigned a_num() const { return p_ == 1 ? 2 : 4; }
    unsigned a_den() const { return p_ == 1 ? 1 : 3; }

    MpReal a(prec_t prec) const {
        return MpReal::from_si(a_num(), prec) / MpReal::from_si(a_den(), prec);
    }
    MpReal u0(prec_t prec) const {
        return MpReal::from_str(p_ == 1 ? "0.0289" : (p_ == 2 ? "0.046" : "0.0297"), prec);
    }
    MpReal gamma1(prec_t prec) const {
        return MpReal::from_str(p_ == 1 ? "6.1" : (p_ == 2 ? "9.41" : "10.2"), prec);
    }
    MpReal sigma_const(prec_t prec) const {
        return MpReal::from_str(p_ == 1 ? "1.67" : (p_ == 2 ? "2.1" : "2.62"), prec);
    }

    // x^a via integer power and root.
    MpReal pow_a(const MpReal& x) const { return pow_ratio(x, a_num(), a_den()); }
    // x^{a-1}: x for p=1, x^{1/3} otherwise.
    MpReal pow_a_minus_1(const MpReal& x) const {
        return p_ == 1 ? x : pow_ratio(x, 1, 3);
    }
    // x^{1/a}: sqrt(x) for p=1, x^{3/4} otherwise.
    MpReal root_a(const MpReal& x) const {
        return p_ == 1 ? sqrt(x) : pow_ratio(x, 3, 4);
    }

    static MpReal pow_ratio(const MpReal& x, unsigned num, unsigned den) {
        MpReal r(x.prec());
        mpfr_pow_ui(r.raw(), x.raw(), num, MPFR_RNDN);
        if (den > 1) {
            MpReal s(x.prec());
            mpfr_rootn_ui(s.raw(), r.raw(), den, MPFR_RNDN);
            return s;
        }
        return r;
    }

private:
    unsigned p_;
};

}  // namespace svdref

#endif
