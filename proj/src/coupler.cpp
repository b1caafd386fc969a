#include "svdref/coupler.hpp"

namespace svdref {

namespace {

void require_conformal(const MpMatrix& D, const DiagonalMatrix& Sigma) {
    if (D.rows() != Sigma.ell() || D.cols() != Sigma.q())
        throw ShapeError("coupler: Delta is " + std::to_string(D.rows()) + "x" +
                         std::to_string(D.cols()) + " but Sigma is " + std::to_string(Sigma.ell()) +
                         "x" + std::to_string(Sigma.q()));
}

void require_regular_spectrum(const DiagonalMatrix& Sigma) {
    for (index_t i = 0; i < Sigma.q(); ++i) {
        if (!(Sigma.value(i) > 0.0))
            throw DegenerateSpectrumError("coupler: sigma_" + std::to_string(i + 1) +
                                              " is not strictly positive",
                                          i, i);
        if (i + 1 < Sigma.q() && !(Sigma.value(i) > Sigma.value(i + 1)))
            throw DegenerateSpectrumError(
                "coupler: sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(i + 2) +
                    " are not strictly descending (repeated or misordered)",
                i, i + 1);
    }
}

// Cross pair entries (4.2)-(4.3) / (10.9)-(10.10) for i < j <= q:
//   x_ij = ((d_ij + conj d_ji)/(s_j - s_i) + (d_ij - conj d_ji)/(s_j + s_i)) / 2
//   y_ij = ((d_ij + conj d_ji)/(s_j - s_i) - (d_ij - conj d_ji)/(s_j + s_i)) / 2
void fill_cross_pair(MpMatrix& X, MpMatrix& Y, const MpMatrix& D, const DiagonalMatrix& Sigma,
                     index_t i, index_t j, prec_t p) {
    const MpReal half(0.5, p);
    const MpReal diff = (Sigma.value(j) - Sigma.value(i)).round_to(p);
    const MpReal sum = (Sigma.value(j) + Sigma.value(i)).round_to(p);
    const MpComplex a = (D(i, j) + conj(D(j, i))) / diff;
    const MpComplex b = (D(i, j) - conj(D(j, i))) / sum;
    MpComplex xij = ((a + b) * half).round_to(p);
    MpComplex yij = ((a - b) * half).round_to(p);
    X(j, i) = -conj(xij);
    X(i, j) = std::move(xij);
    Y(j, i) = -conj(yij);
    Y(i, j) = std::move(yij);
}

// Tall-block entries (4.5): x_ij = d_ij / s_j for i > q. The trailing
// (i,j > q) block stays zero, as chosen in (4.6).
void fill_tall_block(MpMatrix& X, const MpMatrix& D, const DiagonalMatrix& Sigma, prec_t p) {
    for (index_t i = Sigma.q(); i < Sigma.ell(); ++i)
        for (index_t j = 0; j < Sigma.q(); ++j) {
            MpComplex xij = (D(i, j) / Sigma.value(j)).round_to(p);
            X(j, i) = -conj(xij);
            X(i, j) = std::move(xij);
        }
}

}  // namespace

CouplingSolution solve_regular(const MpMatrix& D, const DiagonalMatrix& Sigma) {
    require_conformal(D, Sigma);
    require_regular_spectrum(Sigma);
    const prec_t p = D.precision_bits() > Sigma.precision_bits() ? D.precision_bits()
                                                                 : Sigma.precision_bits();
    const index_t ell = Sigma.ell(), q = Sigma.q();
    CouplingSolution sol{MpMatrix::zeros(ell, q, p), MpMatrix::zeros(ell, ell, p),
                         MpMatrix::zeros(q, q, p)};

    const MpReal half(0.5, p);
    for (index_t i = 0; i < q; ++i) {
        // S_ii = Re d_ii ; x_ii = -y_ii = (Im d_ii / (2 s_i)) i
        sol.S.set(i, i, D(i, i).real());
        MpReal t = ((D(i, i).imag() * half) / Sigma.value(i)).round_to(p);
        sol.X(i, i) = MpComplex(MpReal(p), t);
        sol.Y(i, i) = MpComplex(MpReal(p), -t);
    }
    for (index_t i = 0; i < q; ++i)
        for (index_t j = i + 1; j < q; ++j) fill_cross_pair(sol.X, sol.Y, D, Sigma, i, j, p);
    fill_tall_block(sol.X, D, Sigma, p);
    return sol;
}

CouplingSolution solve_cluster(const MpMatrix& D, const DiagonalMatrix& Sigma,
                               const ClusterPartition& P) {
    require_conformal(D, Sigma);
    if (P.total() != Sigma.q())
        throw ShapeError("solve_cluster: partition covers " + std::to_string(P.total()) +
                         " values, Sigma has " + std::to_string(Sigma.q()));
    for (index_t i = 0; i < Sigma.q(); ++i)
        if (!(Sigma.value(i) > 0.0))
            throw DegenerateSpectrumError("solve_cluster: sigma_" + std::to_string(i + 1) +
                                              " is not strictly positive",
                                          i, i);

    const prec_t p = D.precision_bits() > Sigma.precision_bits() ? D.precision_bits()
                                                                 : Sigma.precision_bits();
    const index_t ell = Sigma.ell(), q = Sigma.q();
    CouplingSolution sol{MpMatrix::zeros(ell, q, p), MpMatrix::zeros(ell, ell, p),
                         MpMatrix::zeros(q, q, p)};

    // S = Diag_{q_1..q_e}(Delta): the full diagonal blocks, complex.
    for (index_t b = 0; b < P.blocks(); ++b) {
        const index_t off = P.offset(b), m = P.multiplicity(b);
        for (index_t i = off; i < off + m; ++i)
            for (index_t j = off; j < off + m; ++j) sol.S.set(i, j, D(i, j));
    }
    // Cross-cluster pairs; within-cluster entries of X and Y stay zero.
    for (index_t i = 0; i < q; ++i)
        for (index_t j = i + 1; j < q; ++j) {
            if (P.block_of(i) == P.block_of(j)) continue;
            if (Sigma.value(i) == Sigma.value(j))
                throw DegenerateSpectrumError("solve_cluster: equal sigma across clusters at " +
                                                  std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1),
                                              i, j);
            fill_cross_pair(sol.X, sol.Y, D, Sigma, i, j, p);
        }
    fill_tall_block(sol.X, D, Sigma, p);
    return sol;
}

BoundsReport check_bounds(const CouplingSolution& sol, const MpMatrix& D, const MpReal& kappa_val) {
    BoundsReport rep;
    const MpReal dn = paper_norm(D);
    const MpReal sn = paper_norm(sol.S);
    const MpReal xn = paper_norm(sol.X);
    const MpReal yn = paper_norm(sol.Y);
    const MpReal kd = kappa_val * dn;
    rep.s_ok = sn <= dn;
    rep.xy_ok = xn <= kd && yn <= kd;
    rep.s_ratio = dn.is_zero() ? MpReal(dn.prec()) : sn / dn;
    rep.x_ratio = kd.is_zero() ? MpReal(kd.prec()) : xn / kd;
    rep.y_ratio = kd.is_zero() ? MpReal(kd.prec()) : yn / kd;
    return rep;
}

}  // namespace svdref
