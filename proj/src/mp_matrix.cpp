#include "svdref/mp_matrix.hpp"

#include <string>

namespace svdref {

namespace {
thread_local OpCounter* g_counter = nullptr;

prec_t max_prec(prec_t a, prec_t b) { return a > b ? a : b; }

void require_same_shape(const MpMatrix& A, const MpMatrix& B, const char* op) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + " vs " + std::to_string(B.rows()) + "x" +
                         std::to_string(B.cols()));
}
}  // namespace

OpCounter* active_counter() { return g_counter; }

CountingScope::CountingScope(OpCounter& c) : prev_(g_counter) { g_counter = &c; }
CountingScope::~CountingScope() { g_counter = prev_; }

MpMatrix MpMatrix::identity(index_t n, prec_t prec) {
    MpMatrix I(n, n, prec);
    for (index_t i = 0; i < n; ++i) I(i, i) = MpComplex(1.0, 0.0, I.precision_bits());
    return I;
}

MpMatrix MpMatrix::round_to(prec_t prec) const {
    MpMatrix R(rows_, cols_, prec);
    for (index_t i = 0; i < rows_ * cols_; ++i) R.a_[i] = a_[i].round_to(R.prec_);
    return R;
}

MpMatrix MpMatrix::select_columns(const std::vector<index_t>& cols) const {
    MpMatrix R(rows_, cols.size(), prec_);
    for (index_t i = 0; i < rows_; ++i)
        for (index_t k = 0; k < cols.size(); ++k) {
            if (cols[k] >= cols_) throw ShapeError("select_columns: index out of range");
            R(i, k) = (*this)(i, cols[k]);
        }
    return R;
}

DiagonalMatrix DiagonalMatrix::round_to(prec_t prec) const {
    DiagonalMatrix R(ell_, q(), prec);
    for (index_t i = 0; i < q(); ++i) R.set_value(i, d_[i]);
    return R;
}

DiagonalMatrix DiagonalMatrix::select(const std::vector<index_t>& idx) const {
    DiagonalMatrix R(idx.size(), idx.size(), prec_);
    for (index_t i = 0; i < idx.size(); ++i) R.set_value(i, d_[idx[i]]);
    return R;
}

MpMatrix DiagonalMatrix::to_matrix() const {
    MpMatrix R(ell_, q(), prec_);
    for (index_t i = 0; i < q(); ++i) R.set(i, i, d_[i]);
    return R;
}

bool DiagonalMatrix::sorted_descending() const {
    for (index_t i = 0; i + 1 < q(); ++i)
        if (d_[i] < d_[i + 1]) return false;
    return true;
}

bool DiagonalMatrix::strictly_descending_positive() const {
    for (index_t i = 0; i < q(); ++i) {
        if (!(d_[i] > 0.0)) return false;
        if (i + 1 < q() && !(d_[i] > d_[i + 1])) return false;
    }
    return true;
}

MpMatrix mul(const MpMatrix& A, const MpMatrix& B) {
    if (A.cols() != B.rows())
        throw ShapeError("mul: " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                         " * " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
    const prec_t p = max_prec(A.precision_bits(), B.precision_bits());
    MpMatrix C(A.rows(), B.cols(), p);

    // Accumulate at the result precision with preallocated mpfr temporaries.
    mpfr_t acc_re, acc_im, t;
    mpfr_init2(acc_re, p);
    mpfr_init2(acc_im, p);
    mpfr_init2(t, p);
    for (index_t i = 0; i < A.rows(); ++i) {
        for (index_t j = 0; j < B.cols(); ++j) {
            mpfr_set_zero(acc_re, 1);
            mpfr_set_zero(acc_im, 1);
            for (index_t k = 0; k < A.cols(); ++k) {
                const MpComplex& a = A(i, k);
                const MpComplex& b = B(k, j);
                // re += ar*br - ai*bi ; im += ar*bi + ai*br
                mpfr_mul(t, a.real().raw(), b.real().raw(), MPFR_RNDN);
                mpfr_add(acc_re, acc_re, t, MPFR_RNDN);
                mpfr_mul(t, a.imag().raw(), b.imag().raw(), MPFR_RNDN);
                mpfr_sub(acc_re, acc_re, t, MPFR_RNDN);
                mpfr_mul(t, a.real().raw(), b.imag().raw(), MPFR_RNDN);
                mpfr_add(acc_im, acc_im, t, MPFR_RNDN);
                mpfr_mul(t, a.imag().raw(), b.real().raw(), MPFR_RNDN);
                mpfr_add(acc_im, acc_im, t, MPFR_RNDN);
            }
            MpReal re(p), im(p);
            mpfr_set(re.raw(), acc_re, MPFR_RNDN);
            mpfr_set(im.raw(), acc_im, MPFR_RNDN);
            C(i, j) = MpComplex(std::move(re), std::move(im));
        }
    }
    mpfr_clear(acc_re);
    mpfr_clear(acc_im);
    mpfr_clear(t);

    if (OpCounter* c = g_counter) {
        c->matrix_mults += 1;
        const std::int64_t n3 =
            std::int64_t(A.rows()) * std::int64_t(A.cols()) * std::int64_t(B.cols());
        c->scalar_mults += 4 * n3;
        c->scalar_adds += 4 * n3;
    }
    return C;
}

MpMatrix add(const MpMatrix& A, const MpMatrix& B) {
    require_same_shape(A, B, "add");
    const prec_t p = max_prec(A.precision_bits(), B.precision_bits());
    MpMatrix C(A.rows(), A.cols(), p);
    for (index_t i = 0; i < A.rows(); ++i)
        for (index_t j = 0; j < A.cols(); ++j) C(i, j) = (A(i, j) + B(i, j)).round_to(p);
    if (OpCounter* c = g_counter) {
        c->matrix_adds += 1;
        c->scalar_adds += 2 * std::int64_t(A.rows()) * std::int64_t(A.cols());
    }
    return C;
}

MpMatrix sub(const MpMatrix& A, const MpMatrix& B) {
    require_same_shape(A, B, "sub");
    const prec_t p = max_prec(A.precision_bits(), B.precision_bits());
    MpMatrix C(A.rows(), A.cols(), p);
    for (index_t i = 0; i < A.rows(); ++i)
        for (index_t j = 0; j < A.cols(); ++j) C(i, j) = (A(i, j) - B(i, j)).round_to(p);
    if (OpCounter* c = g_counter) {
        c->matrix_adds += 1;
        c->scalar_adds += 2 * std::int64_t(A.rows()) * std::int64_t(A.cols());
    }
    return C;
}

MpMatrix adjoint(const MpMatrix& A) {
    MpMatrix C(A.cols(), A.rows(), A.precision_bits());
    for (index_t i = 0; i < A.rows(); ++i)
        for (index_t j = 0; j < A.cols(); ++j) C(j, i) = conj(A(i, j));
    return C;
}

MpMatrix scale(const MpMatrix& A, const MpReal& s) {
    const prec_t p = max_prec(A.precision_bits(), s.prec());
    MpMatrix C(A.rows(), A.cols(), p);
    for (index_t i = 0; i < A.rows(); ++i)
        for (index_t j = 0; j < A.cols(); ++j) C(i, j) = (A(i, j) * s).round_to(p);
    if (OpCounter* c = g_counter)
        c->scalar_mults += 2 * std::int64_t(A.rows()) * std::int64_t(A.cols());
    return C;
}

MpMatrix add_identity(const MpMatrix& A) {
    if (A.rows() != A.cols()) throw ShapeError("add_identity: non-square");
    MpMatrix C = A;
    const MpReal one(1.0, A.precision_bits());
    for (index_t i = 0; i < A.rows(); ++i)
        C(i, i) = MpComplex(C(i, i).real() + one, C(i, i).imag()).round_to(A.precision_bits());
    if (OpCounter* c = g_counter) {
        c->matrix_adds += 1;
        c->scalar_adds += std::int64_t(A.rows());
    }
    return C;
}

MpMatrix hermitize(const MpMatrix& A) {
    if (A.rows() != A.cols()) throw ShapeError("hermitize: non-square");
    const prec_t p = A.precision_bits();
    const MpReal half(0.5, p);
    MpMatrix H(A.rows(), A.rows(), p);
    for (index_t i = 0; i < A.rows(); ++i) {
        H(i, i) = MpComplex(A(i, i).real(), MpReal(p));
        for (index_t j = i + 1; j < A.cols(); ++j) {
            MpComplex h = ((A(i, j) + conj(A(j, i))) * half).round_to(p);
            H(j, i) = conj(h);
            H(i, j) = std::move(h);
        }
    }
    return H;
}

MpMatrix skewize(const MpMatrix& A) {
    if (A.rows() != A.cols()) throw ShapeError("skewize: non-square");
    const prec_t p = A.precision_bits();
    const MpReal half(0.5, p);
    MpMatrix S(A.rows(), A.rows(), p);
    for (index_t i = 0; i < A.rows(); ++i) {
        S(i, i) = MpComplex(MpReal(p), A(i, i).imag());
        for (index_t j = i + 1; j < A.cols(); ++j) {
            MpComplex s = ((A(i, j) - conj(A(j, i))) * half).round_to(p);
            S(j, i) = -conj(s);
            S(i, j) = std::move(s);
        }
    }
    return S;
}

bool equal_exact(const MpMatrix& A, const MpMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (index_t i = 0; i < A.rows(); ++i)
        for (index_t j = 0; j < A.cols(); ++j)
            if (!(A(i, j) == B(i, j))) return false;
    return true;
}

MpReal paper_norm(const MpMatrix& A) {
    if (A.empty()) throw ShapeError("paper_norm: empty matrix");
    const prec_t p = A.precision_bits();
    MpReal best(p);
    mpfr_t sum, a;
    mpfr_init2(sum, p);
    mpfr_init2(a, p);
    // max absolute row sum
    for (index_t i = 0; i < A.rows(); ++i) {
        mpfr_set_zero(sum, 1);
        for (index_t j = 0; j < A.cols(); ++j) {
            mpfr_hypot(a, A(i, j).real().raw(), A(i, j).imag().raw(), MPFR_RNDN);
            mpfr_add(sum, sum, a, MPFR_RNDN);
        }
        if (mpfr_cmp(sum, best.raw()) > 0) mpfr_set(best.raw(), sum, MPFR_RNDN);
    }
    // max absolute row sum of the adjoint = max absolute column sum
    for (index_t j = 0; j < A.cols(); ++j) {
        mpfr_set_zero(sum, 1);
        for (index_t i = 0; i < A.rows(); ++i) {
            mpfr_hypot(a, A(i, j).real().raw(), A(i, j).imag().raw(), MPFR_RNDN);
            mpfr_add(sum, sum, a, MPFR_RNDN);
        }
        if (mpfr_cmp(sum, best.raw()) > 0) mpfr_set(best.raw(), sum, MPFR_RNDN);
    }
    mpfr_clear(sum);
    mpfr_clear(a);
    return best;
}

MpMatrix residual_E(const MpMatrix& W) {
    if (W.rows() < W.cols()) throw ShapeError("residual_E: more columns than rows");
    MpMatrix R = mul(adjoint(W), W);
    const MpReal one(1.0, R.precision_bits());
    for (index_t i = 0; i < R.cols(); ++i)
        R(i, i) = MpComplex((R(i, i).real() - one).round_to(R.precision_bits()), R(i, i).imag());
    if (OpCounter* c = g_counter) {
        c->matrix_adds += 1;
        c->scalar_adds += std::int64_t(R.cols());
    }
    return hermitize(R);
}

MpMatrix svd_residual_dense(const MpMatrix& M, const MpMatrix& U, const MpMatrix& V,
                            const MpMatrix& Sigma) {
    if (U.rows() != M.rows() || V.rows() != M.cols())
        throw ShapeError("svd_residual: U/V do not conform with M");
    if (Sigma.rows() != U.cols() || Sigma.cols() != V.cols())
        throw ShapeError("svd_residual: Sigma shape mismatch");
    return sub(mul(adjoint(U), mul(M, V)), Sigma);
}

MpReal kappa(const DiagonalMatrix& S) {
    const prec_t p = S.precision_bits();
    MpReal best(1.0, p);
    const MpReal one(1.0, p);
    for (index_t i = 0; i < S.q(); ++i) {
        const MpReal ai = abs(S.value(i));
        if (ai.is_zero()) return MpReal::pos_inf(p);
        best = max(best, one / ai);
    }
    for (index_t i = 0; i < S.q(); ++i)
        for (index_t j = i + 1; j < S.q(); ++j) {
            const MpReal d = abs(S.value(i) - S.value(j));
            const MpReal s = abs(S.value(i) + S.value(j));
            if (d.is_zero() || s.is_zero()) return MpReal::pos_inf(p);
            best = max(best, one / d + one / s);
        }
    return best;
}

MpReal kappa_cluster(const DiagonalMatrix& S, const ClusterPartition& P) {
    if (P.total() != S.q()) throw ShapeError("kappa_cluster: partition does not cover Sigma");
    const prec_t p = S.precision_bits();
    MpReal best(1.0, p);
    const MpReal one(1.0, p);
    for (index_t i = 0; i < S.q(); ++i) {
        const MpReal ai = abs(S.value(i));
        if (ai.is_zero()) return MpReal::pos_inf(p);
        best = max(best, one / ai);
    }
    for (index_t i = 0; i < S.q(); ++i)
        for (index_t j = i + 1; j < S.q(); ++j) {
            if (P.block_of(i) == P.block_of(j)) continue;
            const MpReal d = abs(S.value(i) - S.value(j));
            const MpReal s = abs(S.value(i) + S.value(j));
            if (d.is_zero() || s.is_zero()) return MpReal::pos_inf(p);
            best = max(best, one / d + one / s);
        }
    return best;
}

MpReal big_k(const DiagonalMatrix& S) {
    MpReal best(1.0, S.precision_bits());
    for (index_t i = 0; i < S.q(); ++i) best = max(best, S.value(i));
    return best;
}

}  // namespace svdref
