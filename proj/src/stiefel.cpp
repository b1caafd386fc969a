#include "svdref/stiefel.hpp"

namespace svdref {

MpReal default_polar_tol(prec_t bits) { return MpReal::pow2(-(static_cast<long>(bits) - 8), bits); }

MpMatrix polar_step(const MpMatrix& U, unsigned p) {
    if (p < 1) throw Error("polar_step: p >= 1 required");
    MpMatrix E = residual_E(U);
    const MpReal defect = paper_norm(E);
    if (!(defect < 1.0))
        throw ConvergenceError("polar_step: defect " + defect.to_string(6) +
                               " >= 1, outside the series convergence region");
    MpMatrix Omega = hermitize(TruncatedSeries::eval_poly(sp_coefficients(p), E));
    return mul(U, add_identity(Omega));
}

PolarResult polar_project(const MpMatrix& U0, unsigned p, const MpReal& tol, unsigned max_iter) {
    PolarResult res;
    MpMatrix U = U0;
    MpReal defect = paper_norm(residual_E(U));
    if (!(defect < 0.5))
        throw ConvergenceError("polar_project: initial defect " + defect.to_string(6) +
                               " >= 1/2, convergence not guaranteed");
    res.certified_polar_projection = defect < 0.25;
    res.defect_trace.push_back(defect);
    unsigned it = 0;
    while (defect > tol && it < max_iter) {
        U = polar_step(U, p);
        defect = paper_norm(residual_E(U));
        res.defect_trace.push_back(defect);
        ++it;
    }
    if (defect > tol)
        throw PolarConvergenceError("polar_project: defect " + defect.to_string(6) +
                                        " above tol after " + std::to_string(max_iter) +
                                        " iterations",
                                    res.defect_trace);
    res.projected = std::move(U);
    res.iterations = it;
    res.final_defect = std::move(defect);
    return res;
}

}  // namespace svdref
