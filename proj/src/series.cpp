#include "svdref/series.hpp"

#include <gmp.h>

namespace svdref {

namespace {

// binom(2k,k) as an exact MpReal.
MpReal central_binomial(unsigned k) {
    mpz_t b;
    mpz_init(b);
    mpz_bin_uiui(b, 2 * k, k);
    const std::size_t bits = mpz_sizeinbase(b, 2);
    MpReal r(static_cast<prec_t>(bits < kMinPrec ? kMinPrec : bits));
    mpfr_set_z(r.raw(), b, MPFR_RNDN);  // exact
    mpz_clear(b);
    return r;
}

}  // namespace

std::vector<MpReal> sp_coefficients(unsigned p) {
    if (p < 1) throw Error("sp_coefficients: p >= 1 required");
    std::vector<MpReal> t;
    t.reserve(p);
    for (unsigned k = 1; k <= p; ++k) {
        // (-1)^k binom(2k,k) 2^{-2k}, exact
        MpReal c = central_binomial(k).mul_2exp(-2 * static_cast<long>(k));
        t.push_back(k % 2 == 1 ? -c : c);
    }
    return t;
}

std::vector<MpReal> cp_coefficients(unsigned p) {
    if (p < 1) throw Error("cp_coefficients: p >= 1 required");
    std::vector<MpReal> c(p, MpReal(kMinPrec));
    c[0] = MpReal(1.0, kMinPrec);
    for (unsigned k = 1; 2 * k <= p; ++k) {
        // (-1)^{k+1} (2k)! / (4^k (k!)^2 (2k-1)) = (-1)^{k+1} binom(2k,k)/((2k-1) 4^k).
        // binom(2k,k)/(2k-1) = 2*Catalan(k-1) is an integer, so the value is dyadic.
        mpz_t b;
        mpz_init(b);
        mpz_bin_uiui(b, 2 * k, k);
        mpz_divexact_ui(b, b, 2 * k - 1);
        const std::size_t bits = mpz_sizeinbase(b, 2);
        MpReal v(static_cast<prec_t>(bits < kMinPrec ? kMinPrec : bits));
        mpfr_set_z(v.raw(), b, MPFR_RNDN);
        mpz_clear(b);
        v = v.mul_2exp(-2 * static_cast<long>(k));
        c[2 * k - 1] = (k % 2 == 1) ? v : -v;
    }
    return c;
}

std::vector<MpReal> ep_coefficients(unsigned p) {
    std::vector<MpReal> c = cp_coefficients(p);
    c[0] = MpReal(kMinPrec);  // drop the u term
    return c;
}

TruncatedSeries::TruncatedSeries(SeriesKind kind, unsigned degree_p) : kind_(kind), p_(degree_p) {
    coeffs_ = (kind == SeriesKind::S_SERIES) ? sp_coefficients(degree_p)
                                             : cp_coefficients(degree_p);
}

MpMatrix TruncatedSeries::eval_poly(const std::vector<MpReal>& coeffs, const MpMatrix& A) {
    if (A.rows() != A.cols()) throw ShapeError("eval_poly: non-square input");
    std::size_t d = coeffs.size();
    while (d > 0 && coeffs[d - 1].is_zero()) --d;
    const prec_t p = A.precision_bits();
    if (d == 0) return MpMatrix::zeros(A.rows(), A.cols(), p);
    if (d == 1) return scale(A, coeffs[0]);

    // B = c_d I; B = c_k I + B A for k = d-1..1; result = A B.
    MpMatrix B = scale(MpMatrix::identity(A.rows(), p), coeffs[d - 1]);
    for (std::size_t k = d - 1; k >= 1; --k) {
        B = mul(B, A);
        B = add(B, scale(MpMatrix::identity(A.rows(), p), coeffs[k - 1]));
    }
    return mul(A, B);
}

MpReal TruncatedSeries::evaluate_scalar(const MpReal& u) const {
    std::size_t d = coeffs_.size();
    while (d > 0 && coeffs_[d - 1].is_zero()) --d;
    const prec_t p = u.prec();
    if (d == 0) return MpReal(p);
    if (d == 1) return (u * coeffs_[0]).round_to(p);
    MpReal b = coeffs_[d - 1].round_to(p);
    for (std::size_t k = d - 1; k >= 1; --k) b = (b * u + coeffs_[k - 1]).round_to(p);
    return (u * b).round_to(p);
}

}  // namespace svdref
