#ifndef SVDREF_MPCOMPLEX_HPP
#define SVDREF_MPCOMPLEX_HPP

#include "svdref/mpreal.hpp"

namespace svdref {

// Complex number as a pair of MpReal at a common precision.
class MpComplex {
public:
    MpComplex() = default;
    explicit MpComplex(prec_t prec) : re_(prec), im_(prec) {}
    MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {}
    MpComplex(double re, double im, prec_t prec) : re_(re, prec), im_(im, prec) {}

    static MpComplex from_real(MpReal re) {
        MpReal im(re.prec());
        return MpComplex(std::move(re), std::move(im));
    }

    const MpReal& real() const { return re_; }
    const MpReal& imag() const { return im_; }
    MpReal& real() { return re_; }
    MpReal& imag() { return im_; }

    prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    MpComplex round_to(prec_t p) const { return MpComplex(re_.round_to(p), im_.round_to(p)); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend MpComplex operator-(const MpComplex& a) { return MpComplex(-a.re_, -a.im_); }

    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return MpComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend MpComplex operator*(const MpComplex& a, const MpReal& s) {
        return MpComplex(a.re_ * s, a.im_ * s);
    }
    friend MpComplex operator*(const MpReal& s, const MpComplex& a) { return a * s; }
    friend MpComplex operator/(const MpComplex& a, const MpReal& s) {
        return MpComplex(a.re_ / s, a.im_ / s);
    }

    MpComplex& operator+=(const MpComplex& b) { re_ += b.re_; im_ += b.im_; return *this; }
    MpComplex& operator-=(const MpComplex& b) { re_ -= b.re_; im_ -= b.im_; return *this; }

    friend MpComplex conj(const MpComplex& a) { return MpComplex(a.re_, -a.im_); }
    friend MpReal abs(const MpComplex& a) { return hypot(a.re_, a.im_); }

    // Exact equality of both parts.
    friend bool operator==(const MpComplex& a, const MpComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    MpReal re_, im_;
};

}  // namespace svdref

#endif
