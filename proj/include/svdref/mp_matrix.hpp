#ifndef SVDREF_MP_MATRIX_HPP
#define SVDREF_MP_MATRIX_HPP

#include "svdref/cluster_partition.hpp"
#include "svdref/errors.hpp"
#include "svdref/mpcomplex.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace svdref {

using index_t = std::size_t;

// Session-owned operation counters. A refinement session installs one via
// CountingScope; matrix kernels bump the active counter, if any.
// Nothing in the library ever increments `factorizations`: the methods use
// matrix additions and multiplications only, and tests assert the zero.
struct OpCounter {
    std::int64_t matrix_mults = 0;
    std::int64_t matrix_adds = 0;
    std::int64_t scalar_mults = 0;
    std::int64_t scalar_adds = 0;
    std::int64_t factorizations = 0;

    void reset() { *this = OpCounter{}; }
};

OpCounter* active_counter();

class CountingScope {
public:
    explicit CountingScope(OpCounter& c);
    ~CountingScope();
    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

private:
    OpCounter* prev_;
};

// Dense complex matrix, row-major, with an explicit working precision.
// Invariant: every entry is stored at exactly `precision_bits()`.
class MpMatrix {
public:
    MpMatrix() : rows_(0), cols_(0), prec_(kMinPrec) {}

    MpMatrix(index_t rows, index_t cols, prec_t prec)
        : rows_(rows), cols_(cols), prec_(prec < kMinPrec ? kMinPrec : prec),
          a_(rows * cols, MpComplex(prec_)) {}

    static MpMatrix identity(index_t n, prec_t prec);
    static MpMatrix zeros(index_t rows, index_t cols, prec_t prec) {
        return MpMatrix(rows, cols, prec);
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    prec_t precision_bits() const { return prec_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const MpComplex& operator()(index_t i, index_t j) const { return a_[i * cols_ + j]; }
    MpComplex& operator()(index_t i, index_t j) { return a_[i * cols_ + j]; }

    // Stores `v` rounded to the matrix precision.
    void set(index_t i, index_t j, const MpComplex& v) { a_[i * cols_ + j] = v.round_to(prec_); }
    void set(index_t i, index_t j, const MpReal& re) {
        a_[i * cols_ + j] = MpComplex(re.round_to(prec_), MpReal(prec_));
    }

    MpMatrix round_to(prec_t prec) const;

    // Submatrix of the listed columns, in order.
    MpMatrix select_columns(const std::vector<index_t>& cols) const;

private:
    index_t rows_, cols_;
    prec_t prec_;
    std::vector<MpComplex> a_;
};

// The paper's "diagonal" ell x q shape: diag(sigma_1..sigma_q) over a zero
// block. Values are real; regular-mode users require them strictly
// descending and positive.
class DiagonalMatrix {
public:
    DiagonalMatrix() : ell_(0), prec_(kMinPrec) {}
    DiagonalMatrix(index_t ell, index_t q, prec_t prec)
        : ell_(ell), prec_(prec < kMinPrec ? kMinPrec : prec), d_(q, MpReal(prec_)) {
        if (ell < q) throw ShapeError("DiagonalMatrix: ell < q");
    }

    index_t ell() const { return ell_; }
    index_t q() const { return d_.size(); }
    prec_t precision_bits() const { return prec_; }

    const MpReal& value(index_t i) const { return d_[i]; }
    void set_value(index_t i, const MpReal& v) { d_[i] = v.round_to(prec_); }

    DiagonalMatrix round_to(prec_t prec) const;
    DiagonalMatrix select(const std::vector<index_t>& idx) const;

    // Embeds as a dense ell x q matrix at the stated precision.
    MpMatrix to_matrix() const;

    bool sorted_descending() const;
    bool strictly_descending_positive() const;

private:
    index_t ell_;
    prec_t prec_;
    std::vector<MpReal> d_;
};

// --- kernels ----------------------------------------------------------
// Results carry the max precision of the inputs; all intermediate
// arithmetic is rounded at that precision.

MpMatrix mul(const MpMatrix& A, const MpMatrix& B);
MpMatrix add(const MpMatrix& A, const MpMatrix& B);
MpMatrix sub(const MpMatrix& A, const MpMatrix& B);
MpMatrix adjoint(const MpMatrix& A);
MpMatrix scale(const MpMatrix& A, const MpReal& s);
MpMatrix add_identity(const MpMatrix& A);   // A + I, square only

inline MpMatrix operator*(const MpMatrix& A, const MpMatrix& B) { return mul(A, B); }
inline MpMatrix operator+(const MpMatrix& A, const MpMatrix& B) { return add(A, B); }
inline MpMatrix operator-(const MpMatrix& A, const MpMatrix& B) { return sub(A, B); }

// (A + A*)/2 with the mirror image stored exactly; diagonal imaginary
// parts are zeroed.
MpMatrix hermitize(const MpMatrix& A);

// (A - A*)/2 with x_ji = -conj(x_ij) exact; diagonal real parts zeroed.
MpMatrix skewize(const MpMatrix& A);

bool equal_exact(const MpMatrix& A, const MpMatrix& B);

// --- norms and residuals ----------------------------------------------

// max(||A||_1, ||A*||_1) where ||.||_1 is the max absolute row sum
// (the paper's norm; note the naming clash with the usual matrix 1-norm).
MpReal paper_norm(const MpMatrix& A);

// E_l(W) = W*W - I, Hermitian as stored.
MpMatrix residual_E(const MpMatrix& W);

// U*MV - Sigma for a dense Sigma.
MpMatrix svd_residual_dense(const MpMatrix& M, const MpMatrix& U, const MpMatrix& V,
                            const MpMatrix& Sigma);

// kappa(Sigma) = max(1, max 1/|s_i|, max_{i!=j} 1/|s_i-s_j| + 1/|s_i+s_j|).
// A vanishing denominator yields +inf rather than an error.
MpReal kappa(const DiagonalMatrix& S);

// As kappa, but the difference/sum terms range only over pairs in
// distinct clusters of P.
MpReal kappa_cluster(const DiagonalMatrix& S, const ClusterPartition& P);

// K(Sigma) = max(1, max_i s_i).
MpReal big_k(const DiagonalMatrix& S);

}  // namespace svdref

#endif
