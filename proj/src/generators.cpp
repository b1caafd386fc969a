#include "svdref/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace svdref {

namespace {

// Deterministic standard normals: explicit Box-Muller on mt19937_64
// uniforms (std::normal_distribution is implementation-defined).
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

private:
    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 rng_;
    bool have_ = false;
    double cached_ = 0.0;
};

// Modified Gram-Schmidt at working precision.
void orthonormalize_columns(MpMatrix& A) {
    const prec_t p = A.precision_bits();
    for (index_t j = 0; j < A.cols(); ++j) {
        for (index_t k = 0; k < j; ++k) {
            MpComplex proj(p);
            for (index_t i = 0; i < A.rows(); ++i) proj += conj(A(i, k)) * A(i, j);
            proj = proj.round_to(p);
            for (index_t i = 0; i < A.rows(); ++i)
                A(i, j) = (A(i, j) - A(i, k) * proj).round_to(p);
        }
        MpReal nrm(p);
        for (index_t i = 0; i < A.rows(); ++i) {
            nrm += A(i, j).real() * A(i, j).real() + A(i, j).imag() * A(i, j).imag();
        }
        nrm = sqrt(nrm).round_to(p);
        if (nrm.is_zero()) throw Error("orthonormalize: rank-deficient random draw");
        for (index_t i = 0; i < A.rows(); ++i) A(i, j) = (A(i, j) / nrm).round_to(p);
    }
}

}  // namespace

MpMatrix gen_cauchy(index_t n, prec_t bits) {
    if (n < 1) throw Error("gen_cauchy: n >= 1 required");
    MpMatrix M(n, n, bits);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) {
            MpReal v(bits);
            mpfr_set_ui(v.raw(), 1, MPFR_RNDN);
            mpfr_div_ui(v.raw(), v.raw(), static_cast<unsigned long>(i + j + 2), MPFR_RNDN);
            M.set(i, j, v);
        }
    return M;
}

MpMatrix gen_random(index_t m, index_t n, prec_t bits, std::uint64_t seed) {
    NormalSource g(seed);
    MpMatrix M(m, n, bits);
    for (index_t i = 0; i < m; ++i)
        for (index_t j = 0; j < n; ++j) {
            const double re = g.next();
            const double im = g.next();
            M(i, j) = MpComplex(re, im, bits);
        }
    return M;
}

MpMatrix gen_random_stiefel(index_t m, index_t k, prec_t bits, std::uint64_t seed) {
    MpMatrix A = gen_random(m, k, bits, seed);
    orthonormalize_columns(A);
    return A;
}

PrescribedMatrix gen_prescribed(index_t n, prec_t bits, std::uint64_t seed) {
    if (n < 1) throw Error("gen_prescribed: n >= 1 required");
    const index_t size = 4 * n;
    PrescribedMatrix out;
    out.reference_sigma.reserve(size);
    // n triples at 2^i, then n simple values 2^-i; exact powers of two.
    for (index_t i = n; i >= 1; --i)
        for (int r = 0; r < 3; ++r)
            out.reference_sigma.push_back(MpReal::pow2(static_cast<long>(i), bits));
    for (index_t i = 1; i <= n; ++i)
        out.reference_sigma.push_back(MpReal::pow2(-static_cast<long>(i), bits));

    MpMatrix U = gen_random_stiefel(size, size, bits, seed);
    MpMatrix V = gen_random_stiefel(size, size, bits, seed ^ 0x9e3779b97f4a7c15ull);
    MpMatrix S(size, size, bits);
    for (index_t i = 0; i < size; ++i) S.set(i, i, out.reference_sigma[i]);
    out.M = mul(mul(U, S), V);
    return out;
}

}  // namespace svdref
