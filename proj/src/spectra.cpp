#include "svdref/spectra.hpp"

#include "svdref/constants.hpp"

namespace svdref {

ClusterPartition partition(const DiagonalMatrix& S, const MpReal& delta) {
    if (!S.sorted_descending()) throw Error("partition: Sigma must be sorted descending");
    const index_t q = S.q();
    std::vector<std::size_t> mult;
    index_t start = 0;
    for (index_t j = 1; j <= q; ++j) {
        // extend the current block while the extreme pair stays within delta
        if (j == q || abs(S.value(start) - S.value(j)) > delta) {
            mult.push_back(j - start);
            start = j;
        }
    }
    ClusterPartition P(std::move(mult), delta);
    // The greedy construction satisfies the within inequalities; the cross
    // ones can still fail (chains), in which case no valid partition exists.
    for (index_t i = 0; i < q; ++i)
        for (index_t j = i + 1; j < q; ++j) {
            const MpReal gap = abs(S.value(i) - S.value(j));
            const bool same = P.block_of(i) == P.block_of(j);
            if (same && gap > delta)
                throw Error("partition: no valid clustering, within-pair " + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + " exceeds delta");
            if (!same && !(gap > delta))
                throw Error("partition: no valid clustering, cross-pair " + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + " is within delta (chained spectrum)");
        }
    return P;
}

MpReal deflation_quantity(const SvdTriplet& T, const MpMatrix& M, unsigned p) {
    if (!(T.m() == T.n() && T.m() == T.ell() && T.m() == T.q()))
        throw ShapeError("deflation_quantity: square case m = n = ell = q required");
    if (M.rows() != T.m() || M.cols() != T.n())
        throw ShapeError("deflation_quantity: M does not conform with the triplet");
    const OrderConstants C(p);
    const prec_t bits = T.U.precision_bits();
    const MpReal u0 = C.u0(bits);
    const MpReal K = big_k(T.sigma);
    const MpReal dn = paper_norm(svd_residual_dense(M, T.U, T.V, T.sigma_matrix()));
    const MpReal eu = paper_norm(residual_E(T.U));
    const MpReal ev = paper_norm(residual_E(T.V));
    const MpReal Ka = C.pow_a(K);
    MpReal inner = max(C.pow_a_minus_1(K) * dn, max(Ka * eu, Ka * ev)) / u0;
    return C.root_a(inner);
}

MpReal pair_kappa(const MpReal& si, const MpReal& sj) {
    const prec_t p = si.prec() > sj.prec() ? si.prec() : sj.prec();
    const MpReal one(1.0, p);
    const MpReal d = abs(si - sj);
    const MpReal s = abs(si + sj);
    if (d.is_zero() || s.is_zero()) return MpReal::pos_inf(p);
    return max(one, one / d + one / s);
}

MpReal deflation_kappa(const DiagonalMatrix& S) {
    MpReal best(1.0, S.precision_bits());
    for (index_t i = 0; i < S.q(); ++i)
        for (index_t j = i + 1; j < S.q(); ++j) best = max(best, pair_kappa(S.value(i), S.value(j)));
    return best;
}

std::vector<index_t> deflation_scan(const DiagonalMatrix& S, const MpReal& e) {
    if (!S.sorted_descending()) throw Error("deflation_scan: Sigma must be sorted descending");
    const index_t n = S.q();
    if (n == 0) return {};
    const MpReal one(1.0, e.prec());
    std::vector<index_t> k{0};
    index_t i = 0;
    while (i < n) {
        index_t j = 1;
        while (i + j < n && pair_kappa(S.value(i), S.value(i + j)) * e > one) ++j;
        if (i + j < n && pair_kappa(S.value(i), S.value(i + j)) * e <= one) k.push_back(i + j);
        i += j;
    }
    return k;
}

DeflationResult deflate(const SvdTriplet& T, const MpMatrix& M, unsigned p) {
    MpReal e = deflation_quantity(T, M, p);
    if (e > 1.0)
        throw Error("deflate: deflation quantity e = " + e.to_string(6) + " exceeds 1");
    DeflationResult res;
    res.selected = deflation_scan(T.sigma, e);
    res.index_q = res.selected.size();
    res.deflated = SvdTriplet::regular(T.U.select_columns(res.selected),
                                       T.V.select_columns(res.selected),
                                       T.sigma.select(res.selected));
    res.quantity_e = std::move(e);
    // Thm. 10.12's guarantee, restated as a post-check.
    if (deflation_kappa(res.deflated.sigma) * res.quantity_e > 1.0)
        throw Error("deflate: selected spectrum violates kappa * e <= 1");
    return res;
}

long prescribed_deflation_threshold(unsigned matrix_size, unsigned p) {
    const prec_t bits = 256;
    const OrderConstants C(p);
    const MpReal a = C.a(bits);
    const MpReal u0 = C.u0(bits);
    const MpReal three(3.0, bits), four(4.0, bits), two(2.0, bits);
    // -floor(log2(3^a u0 / (4^a 2^{N a})))
    MpReal v = pow(three, a) * u0 / (pow(four, a) * pow(two, MpReal::from_si(matrix_size, bits) * a));
    return -floor(log2(v)).to_long();
}

}  // namespace svdref
