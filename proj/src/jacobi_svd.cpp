#include "svdref/jacobi_svd.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace svdref {

namespace {

// Column-major working copy so rotations touch contiguous storage.
struct Columns {
    index_t m = 0, n = 0;
    prec_t bits = kMinPrec;
    std::vector<MpComplex> a;  // column-major

    Columns(const MpMatrix& M, prec_t b) : m(M.rows()), n(M.cols()), bits(b) {
        a.reserve(m * n);
        for (index_t j = 0; j < n; ++j)
            for (index_t i = 0; i < m; ++i) a.push_back(M(i, j).round_to(bits));
    }
    Columns(index_t m_, index_t n_, prec_t b) : m(m_), n(n_), bits(b), a(m_ * n_, MpComplex(b)) {}

    MpComplex& at(index_t i, index_t j) { return a[j * m + i]; }
    const MpComplex& at(index_t i, index_t j) const { return a[j * m + i]; }

    void swap_columns(index_t i, index_t j) {
        for (index_t k = 0; k < m; ++k) std::swap(at(k, i), at(k, j));
    }
};

// ||col_j||^2 at working precision.
MpReal column_sqnorm(const Columns& G, index_t j, prec_t p) {
    mpfr_t acc, t;
    mpfr_init2(acc, p);
    mpfr_init2(t, p);
    mpfr_set_zero(acc, 1);
    for (index_t k = 0; k < G.m; ++k) {
        const MpComplex& g = G.at(k, j);
        mpfr_mul(t, g.real().raw(), g.real().raw(), MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
        mpfr_mul(t, g.imag().raw(), g.imag().raw(), MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
    }
    MpReal r(p);
    mpfr_set(r.raw(), acc, MPFR_RNDN);
    mpfr_clear(acc);
    mpfr_clear(t);
    return r;
}

// col_i* . col_j
MpComplex column_dot(const Columns& G, index_t i, index_t j, prec_t p) {
    mpfr_t acc_re, acc_im, t;
    mpfr_init2(acc_re, p);
    mpfr_init2(acc_im, p);
    mpfr_init2(t, p);
    mpfr_set_zero(acc_re, 1);
    mpfr_set_zero(acc_im, 1);
    for (index_t k = 0; k < G.m; ++k) {
        const MpComplex& x = G.at(k, i);
        const MpComplex& y = G.at(k, j);
        // conj(x) * y
        mpfr_mul(t, x.real().raw(), y.real().raw(), MPFR_RNDN);
        mpfr_add(acc_re, acc_re, t, MPFR_RNDN);
        mpfr_mul(t, x.imag().raw(), y.imag().raw(), MPFR_RNDN);
        mpfr_add(acc_re, acc_re, t, MPFR_RNDN);
        mpfr_mul(t, x.real().raw(), y.imag().raw(), MPFR_RNDN);
        mpfr_add(acc_im, acc_im, t, MPFR_RNDN);
        mpfr_mul(t, x.imag().raw(), y.real().raw(), MPFR_RNDN);
        mpfr_sub(acc_im, acc_im, t, MPFR_RNDN);
    }
    MpReal re(p), im(p);
    mpfr_set(re.raw(), acc_re, MPFR_RNDN);
    mpfr_set(im.raw(), acc_im, MPFR_RNDN);
    mpfr_clear(acc_re);
    mpfr_clear(acc_im);
    mpfr_clear(t);
    return MpComplex(std::move(re), std::move(im));
}

// Right-multiplies columns (i,j) of G by [[cs, conj(sn)], [-sn, cs]],
// working in preallocated mpfr temporaries.
void apply_rotation(Columns& G, index_t i, index_t j, const MpReal& cs, const MpComplex& sn,
                    prec_t p) {
    mpfr_t nre, nim, mre, mim, t;
    mpfr_init2(nre, p);
    mpfr_init2(nim, p);
    mpfr_init2(mre, p);
    mpfr_init2(mim, p);
    mpfr_init2(t, p);
    mpfr_srcptr cs_r = cs.raw();
    mpfr_srcptr sn_re = sn.real().raw();
    mpfr_srcptr sn_im = sn.imag().raw();
    for (index_t k = 0; k < G.m; ++k) {
        MpComplex& g1 = G.at(k, i);
        MpComplex& g2 = G.at(k, j);
        mpfr_srcptr a_re = g1.real().raw(), a_im = g1.imag().raw();
        mpfr_srcptr b_re = g2.real().raw(), b_im = g2.imag().raw();
        // new_i = g1*cs - sn*g2
        mpfr_mul(nre, a_re, cs_r, MPFR_RNDN);
        mpfr_mul(t, sn_re, b_re, MPFR_RNDN);
        mpfr_sub(nre, nre, t, MPFR_RNDN);
        mpfr_mul(t, sn_im, b_im, MPFR_RNDN);
        mpfr_add(nre, nre, t, MPFR_RNDN);
        mpfr_mul(nim, a_im, cs_r, MPFR_RNDN);
        mpfr_mul(t, sn_re, b_im, MPFR_RNDN);
        mpfr_sub(nim, nim, t, MPFR_RNDN);
        mpfr_mul(t, sn_im, b_re, MPFR_RNDN);
        mpfr_sub(nim, nim, t, MPFR_RNDN);
        // new_j = conj(sn)*g1 + cs*g2
        mpfr_mul(mre, sn_re, a_re, MPFR_RNDN);
        mpfr_mul(t, sn_im, a_im, MPFR_RNDN);
        mpfr_add(mre, mre, t, MPFR_RNDN);
        mpfr_mul(t, cs_r, b_re, MPFR_RNDN);
        mpfr_add(mre, mre, t, MPFR_RNDN);
        mpfr_mul(mim, sn_re, a_im, MPFR_RNDN);
        mpfr_mul(t, sn_im, a_re, MPFR_RNDN);
        mpfr_sub(mim, mim, t, MPFR_RNDN);
        mpfr_mul(t, cs_r, b_im, MPFR_RNDN);
        mpfr_add(mim, mim, t, MPFR_RNDN);

        mpfr_set(g1.real().raw(), nre, MPFR_RNDN);
        mpfr_set(g1.imag().raw(), nim, MPFR_RNDN);
        mpfr_set(g2.real().raw(), mre, MPFR_RNDN);
        mpfr_set(g2.imag().raw(), mim, MPFR_RNDN);
    }
    mpfr_clear(nre);
    mpfr_clear(nim);
    mpfr_clear(mre);
    mpfr_clear(mim);
    mpfr_clear(t);
}

SvdTriplet jacobi_decompose(const MpMatrix& M, prec_t bits, const JacobiOptions& opts) {
    const index_t m = M.rows(), n = M.cols();
    const prec_t p = bits;
    Columns G(M, p);
    Columns V(n, n, p);
    const MpReal one(1.0, p);
    for (index_t j = 0; j < n; ++j) V.at(j, j) = MpComplex(1.0, 0.0, p);

    std::vector<MpReal> sq(n, MpReal(p));
    for (index_t j = 0; j < n; ++j) sq[j] = column_sqnorm(G, j, p);

    const MpReal tol2 = opts.tol * opts.tol;
    const MpReal two(2.0, p);

    bool converged = false;
    for (unsigned sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        // de Rijk pivoting: keep columns sorted by descending norm
        for (index_t i = 0; i + 1 < n; ++i) {
            index_t best = i;
            for (index_t j = i + 1; j < n; ++j)
                if (sq[j] > sq[best]) best = j;
            if (best != i) {
                G.swap_columns(i, best);
                V.swap_columns(i, best);
                std::swap(sq[i], sq[best]);
            }
        }

        converged = true;
        for (index_t i = 0; i + 1 < n; ++i) {
            for (index_t j = i + 1; j < n; ++j) {
                if (sq[i].is_zero() || sq[j].is_zero()) continue;
                const MpComplex c = column_dot(G, i, j, p);
                const MpReal c2 = c.real() * c.real() + c.imag() * c.imag();
                if (c2 <= tol2 * sq[i] * sq[j]) continue;
                converged = false;

                const MpReal absc = abs(c);
                MpReal zeta = ((sq[i] - sq[j]) / (two * absc)).round_to(p);
                MpReal w = sqrt(zeta * zeta + one);
                MpReal t = (zeta.sign() >= 0) ? one / (zeta + w) : one / (zeta - w);
                MpReal cs = one / sqrt(t * t + one);
                MpComplex sn = (conj(c) / absc) * (-(t * cs));

                apply_rotation(G, i, j, cs, sn, p);
                apply_rotation(V, i, j, cs, sn, p);
                sq[i] = column_sqnorm(G, i, p);
                sq[j] = column_sqnorm(G, j, p);
            }
        }
    }
    if (!converged)
        throw ConvergenceError("init_svd: one-sided Jacobi did not converge within " +
                               std::to_string(opts.max_sweeps) + " sweeps");

    // Sort descending, normalize, fix column phases.
    std::vector<index_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](index_t x, index_t y) { return sq[x] > sq[y]; });

    MpMatrix U(m, n, p), Vm(n, n, p);
    DiagonalMatrix sigma(n, n, p);
    const MpReal noise = MpReal::pow2(-static_cast<long>(p) / 2, p);
    for (index_t jj = 0; jj < n; ++jj) {
        const index_t src = order[jj];
        MpReal s = sqrt(sq[src]);
        sigma.set_value(jj, s);
        // phase that makes the first above-noise component real positive
        MpComplex phase(1.0, 0.0, p);
        if (!s.is_zero()) {
            for (index_t k = 0; k < m; ++k) {
                const MpComplex u = (G.at(k, src) / s).round_to(p);
                if (abs(u) > noise) {
                    phase = (conj(u) / abs(u)).round_to(p);
                    break;
                }
            }
        }
        for (index_t k = 0; k < m; ++k)
            U(k, jj) = s.is_zero() ? MpComplex(p) : ((G.at(k, src) / s) * phase).round_to(p);
        for (index_t k = 0; k < n; ++k) Vm(k, jj) = (V.at(k, src) * phase).round_to(p);
    }
    return SvdTriplet::regular(std::move(U), std::move(Vm), std::move(sigma));
}

}  // namespace

JacobiOptions default_jacobi_options(prec_t bits) {
    JacobiOptions o;
    o.tol = MpReal::pow2(-(3 * static_cast<long>(bits)) / 4, bits);
    return o;
}

SvdTriplet init_svd(const MpMatrix& M, prec_t bits) {
    return init_svd(M, bits, default_jacobi_options(bits));
}

SvdTriplet init_svd(const MpMatrix& M, prec_t bits, const JacobiOptions& opts) {
    if (M.rows() >= M.cols()) return jacobi_decompose(M, bits, opts);
    // Wide input: decompose the adjoint and swap the factors.
    SvdTriplet t = jacobi_decompose(adjoint(M), bits, opts);
    return SvdTriplet::regular(std::move(t.V), std::move(t.U), std::move(t.sigma));
}

}  // namespace svdref
