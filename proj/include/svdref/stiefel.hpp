#ifndef SVDREF_STIEFEL_HPP
#define SVDREF_STIEFEL_HPP

#include "svdref/mp_matrix.hpp"
#include "svdref/series.hpp"

#include <optional>
#include <vector>

namespace svdref {

// Outcome of the high-order polar iteration U <- U (I + s_p(E(U))).
struct PolarResult {
    MpMatrix projected;
    unsigned iterations = 0;
    MpReal final_defect;
    // paper_norm(residual_E(U_i)) for each stored iterate, starting at U0.
    std::vector<MpReal> defect_trace;
    // The limit is guaranteed to be the polar projection pi(U0) only when
    // the initial defect is below 1/4; between 1/4 and 1/2 the limit is
    // Stiefel but its identification is not certified.
    bool certified_polar_projection = false;
};

class PolarConvergenceError : public ConvergenceError {
public:
    PolarConvergenceError(const std::string& what, std::vector<MpReal> trace)
        : ConvergenceError(what), defect_trace(std::move(trace)) {}
    std::vector<MpReal> defect_trace;
};

// One step of iteration (3.4). Requires paper_norm(residual_E(U)) < 1,
// the series' convergence region; refuses otherwise.
MpMatrix polar_step(const MpMatrix& U, unsigned p);

// Iterates polar_step until the defect falls below tol or max_iter is hit.
// Requires initial defect < 1/2. Throws PolarConvergenceError carrying the
// defect trace on exhaustion.
PolarResult polar_project(const MpMatrix& U0, unsigned p, const MpReal& tol,
                          unsigned max_iter = 64);

// Default tolerance: 2^{-(bits-8)}, leaving 8 guard bits above roundoff.
MpReal default_polar_tol(prec_t bits);

}  // namespace svdref

#endif
