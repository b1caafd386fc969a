#ifndef SVDREF_COUPLER_HPP
#define SVDREF_COUPLER_HPP

#include "svdref/cluster_partition.hpp"
#include "svdref/mp_matrix.hpp"

namespace svdref {

// Solution of the coupling equation Delta - S - X Sigma + Sigma Y = 0.
// X (ell x ell) and Y (q x q) are skew-Hermitian as stored; S (ell x q) is
// real diagonal in regular mode and carries the full diagonal blocks of
// Delta in cluster mode.
struct CouplingSolution {
    MpMatrix S;
    MpMatrix X;
    MpMatrix Y;
};

// Explicit entrywise formulas; no linear system is solved and no matrix is
// inverted. Requires Sigma strictly descending and positive.
CouplingSolution solve_regular(const MpMatrix& D, const DiagonalMatrix& Sigma);

// Cluster variant: S absorbs the diagonal blocks given by P, X and Y
// vanish on those blocks and couple only cross-cluster pairs.
CouplingSolution solve_cluster(const MpMatrix& D, const DiagonalMatrix& Sigma,
                               const ClusterPartition& P);

struct BoundsReport {
    MpReal s_ratio;       // ||S|| / ||Delta||
    MpReal x_ratio;       // ||X|| / (kappa ||Delta||)
    MpReal y_ratio;       // ||Y|| / (kappa ||Delta||)
    bool s_ok = false;    // ||S|| <= ||Delta||
    bool xy_ok = false;   // ||X||,||Y|| <= kappa ||Delta||
};

// Checks the Prop. 4.3 contracts ||S|| <= ||Delta||, ||X||,||Y|| <= kappa ||Delta||.
BoundsReport check_bounds(const CouplingSolution& sol, const MpMatrix& D, const MpReal& kappa_val);

}  // namespace svdref

#endif
