#ifndef SVDREF_JACOBI_SVD_HPP
#define SVDREF_JACOBI_SVD_HPP

#include "svdref/mp_matrix.hpp"
#include "svdref/triplet.hpp"

namespace svdref {

struct JacobiOptions {
    // Pairs (i,j) count as converged when |g_i* g_j| <= tol ||g_i|| ||g_j||.
    // The default, 2^{-3 bits/4}, leaves the residual of the returned
    // triplet near 2^{-3 bits/4} ||M||, comparable to a one-shot SVD
    // carried out at the working precision.
    MpReal tol;
    unsigned max_sweeps = 30;
};

JacobiOptions default_jacobi_options(prec_t bits);

// One-sided Jacobi SVD at `bits` working precision. Returns a regular-mode
// triplet sorted descending, with the first above-noise component of each
// U column made real positive. Throws ConvergenceError after
// max_sweeps non-converged sweeps.
SvdTriplet init_svd(const MpMatrix& M, prec_t bits);
SvdTriplet init_svd(const MpMatrix& M, prec_t bits, const JacobiOptions& opts);

}  // namespace svdref

#endif
