#ifndef SVDREF_TRIPLET_HPP
#define SVDREF_TRIPLET_HPP

#include "svdref/cluster_partition.hpp"
#include "svdref/mp_matrix.hpp"

#include <optional>

namespace svdref {

enum class TripletMode { Regular, Cluster };

// Approximate decomposition (U, V, Sigma) with m >= ell >= q, n >= q.
//
// In regular mode Sigma is the real diagonal and sigma_block is unused.
// In cluster mode the authoritative Sigma is block-diagonal (sigma_block);
// `sigma` tracks the real parts of its diagonal, which drive kappa, K and
// the coupling denominators.
struct SvdTriplet {
    MpMatrix U;   // m x ell
    MpMatrix V;   // n x q
    DiagonalMatrix sigma;
    TripletMode mode = TripletMode::Regular;
    std::optional<ClusterPartition> partition;  // cluster mode only
    MpMatrix sigma_block;                       // cluster mode only, ell x q

    index_t m() const { return U.rows(); }
    index_t ell() const { return U.cols(); }
    index_t n() const { return V.rows(); }
    index_t q() const { return V.cols(); }

    // The Sigma used in matrix products.
    MpMatrix sigma_matrix() const {
        return mode == TripletMode::Cluster ? sigma_block : sigma.to_matrix();
    }

    void validate() const {
        if (U.cols() > U.rows()) throw ShapeError("SvdTriplet: ell > m");
        if (V.cols() > V.rows()) throw ShapeError("SvdTriplet: q > n");
        if (sigma.ell() != U.cols() || sigma.q() != V.cols())
            throw ShapeError("SvdTriplet: Sigma shape does not match U/V");
        // Regular mode needs a descending spectrum; within a cluster the
        // order is immaterial (only positivity is required there).
        if (mode == TripletMode::Regular && !sigma.sorted_descending())
            throw ShapeError("SvdTriplet: Sigma not sorted descending");
        if (mode == TripletMode::Cluster) {
            if (!partition) throw Error("SvdTriplet: cluster mode without partition");
            if (partition->total() != sigma.q())
                throw ShapeError("SvdTriplet: partition does not cover Sigma");
            if (sigma_block.rows() != sigma.ell() || sigma_block.cols() != sigma.q())
                throw ShapeError("SvdTriplet: sigma_block shape mismatch");
        }
    }

    SvdTriplet round_to(prec_t bits) const {
        SvdTriplet t;
        t.U = U.round_to(bits);
        t.V = V.round_to(bits);
        t.sigma = sigma.round_to(bits);
        t.mode = mode;
        t.partition = partition;
        if (mode == TripletMode::Cluster) t.sigma_block = sigma_block.round_to(bits);
        return t;
    }

    static SvdTriplet regular(MpMatrix U, MpMatrix V, DiagonalMatrix sigma) {
        SvdTriplet t;
        t.U = std::move(U);
        t.V = std::move(V);
        t.sigma = std::move(sigma);
        t.validate();
        return t;
    }

    static SvdTriplet cluster(MpMatrix U, MpMatrix V, DiagonalMatrix sigma, ClusterPartition P) {
        SvdTriplet t;
        t.U = std::move(U);
        t.V = std::move(V);
        t.sigma = std::move(sigma);
        t.mode = TripletMode::Cluster;
        t.partition = std::move(P);
        t.sigma_block = t.sigma.to_matrix();
        t.validate();
        return t;
    }
};

}  // namespace svdref

#endif
