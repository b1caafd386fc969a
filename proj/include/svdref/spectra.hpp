#ifndef SVDREF_SPECTRA_HPP
#define SVDREF_SPECTRA_HPP

#include "svdref/cluster_partition.hpp"
#include "svdref/mp_matrix.hpp"
#include "svdref/triplet.hpp"

#include <vector>

namespace svdref {

// Greedy left-to-right grouping of a descending spectrum into clusters of
// size delta; validates that within-cluster pairs differ by at most delta
// and cross-cluster pairs by more. Throws when no partition can satisfy
// both families (e.g. a chain with small adjacent gaps but wide endpoints).
ClusterPartition partition(const DiagonalMatrix& S, const MpReal& delta);

struct DeflationResult {
    std::vector<index_t> selected;  // 0-based, ascending
    SvdTriplet deflated;
    MpReal quantity_e;
    index_t index_q = 0;  // == selected.size()
};

// Prop. 10.9's deflation quantity
//   e = max(K^{a-1}||Delta||/u0, K^a/u0 ||E(U)||, K^a/u0 ||E(V)||)^{1/a}.
// Square case only (m = n = ell = q).
MpReal deflation_quantity(const SvdTriplet& T, const MpMatrix& M, unsigned p);

// Pair condition number of Algorithm 10.11:
//   kappa_{i,j} = max(1, 1/|s_i - s_j| + 1/|s_i + s_j|),
// and its maximum over all pairs of a spectrum (the square-case kappa used
// by the deflation guarantee).
MpReal pair_kappa(const MpReal& si, const MpReal& sj);
MpReal deflation_kappa(const DiagonalMatrix& S);

// The greedy scan of Algorithm 10.11 on a descending spectrum, for a given
// quantity e. Returns the selected 0-based indices.
std::vector<index_t> deflation_scan(const DiagonalMatrix& S, const MpReal& e);

// Full deflation: requires deflation_quantity <= 1; selects columns and
// guarantees deflation_kappa(Sigma_q) * e <= 1.
DeflationResult deflate(const SvdTriplet& T, const MpMatrix& M, unsigned p);

// -floor(log2(3^a u0 / (4^a 2^{N a}))) for the prescribed-spectrum family,
// where N is the matrix size (the paper's 4n).
long prescribed_deflation_threshold(unsigned matrix_size, unsigned p);

}  // namespace svdref

#endif
