#ifndef SVDREF_REFINER_HPP
#define SVDREF_REFINER_HPP

#include "svdref/constants.hpp"
#include "svdref/coupler.hpp"
#include "svdref/mp_matrix.hpp"
#include "svdref/series.hpp"
#include "svdref/triplet.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace svdref {

// Outcome of the certification test
//   eps = max((kappa K)^a ||E(U)||, (kappa K)^a ||E(V)||, kappa^a K^{a-1} ||Delta||)
// against the threshold u0 of the order-p constants table. A pass proves an
// exact SVD exists within the theorem's distance bounds of the triplet.
struct Certificate {
    unsigned p = 1;
    MpReal a;
    MpReal u0;
    MpReal gamma1;
    MpReal sigma_const;
    MpReal epsilon;
    MpReal kappa_val;
    MpReal k_val;
    MpReal delta_norm;
    MpReal eu_norm;
    MpReal ev_norm;
    bool pass = false;
};

class CertificationError : public Error {
public:
    CertificationError(const std::string& what, Certificate cert)
        : Error(what), certificate(std::move(cert)) {}
    Certificate certificate;
};

// Per-step diagnostics of one H_p application.
struct StepReport {
    MpReal omega_norm;
    MpReal lambda_norm;
    MpReal theta_norm;
    MpReal psi_norm;
    MpReal s_norm;
    // ||Delta_k|| for k = 1..p+1; back() is the predicted next residual.
    std::vector<MpReal> delta_norms;
};

inline constexpr long kEIndexExact = std::numeric_limits<long>::max();

// e = -floor(log2(eps/u0)); kEIndexExact when eps is exactly zero.
long e_index(const MpReal& epsilon, const MpReal& u0);

struct TraceRow {
    unsigned iteration = 0;
    MpReal epsilon;
    long e_idx = 0;
    MpReal delta_norm;
    MpReal eu_norm;
    MpReal ev_norm;
    prec_t bits = kMinPrec;
    OpCounter ops;  // cumulative snapshot
};

struct RefinementTrace {
    std::vector<TraceRow> rows;
    std::vector<StepReport> steps;
    Certificate initial;
    unsigned order_p = 1;

    std::string to_csv() const;    // iteration,order,e_i,epsilon_i,bits,mults
    std::string to_table() const;  // iterations x order, e_i cells
};

class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, RefinementTrace trace)
        : Error(what), trace(std::move(trace)) {}
    RefinementTrace trace;
};

Certificate certify(const SvdTriplet& T, const MpMatrix& M, unsigned p);

// One application of the order-(p+1) map. Regular mode keeps Sigma real
// diagonal; cluster mode updates the block-diagonal Sigma and keeps its
// off-block entries exactly zero.
std::pair<SvdTriplet, StepReport> hp_step(const SvdTriplet& T, const MpMatrix& M, unsigned p);

struct DsReport {
    MpReal eps1;            // ||Delta|| on entry
    MpReal hypothesis;      // kappa^{5/4} K^{2/5} eps1 (DS) or kappa^{6/5} K^{3/10} eps1
    MpReal residual_norm;   // ||U1* M V1 - Sigma1||
};

// Davies-Smith cubic update and its revisited variant; regular mode only.
std::pair<SvdTriplet, DsReport> ds_step(const SvdTriplet& T, const MpMatrix& M);
std::pair<SvdTriplet, DsReport> ds_revisited_step(const SvdTriplet& T, const MpMatrix& M);

struct PrecisionSchedule {
    prec_t base_bits = 64;
    bool geometric = true;  // base * (p+1)^i at iteration i; fixed otherwise

    prec_t bits_for(unsigned iteration, unsigned p) const;
};

struct StopRule {
    std::optional<MpReal> target_eps;
    unsigned max_iter = 3;
};

// Iterates hp_step with the precision schedule. Requires the initial
// certificate to pass; aborts (with the partial trace) when epsilon fails
// to halve on two consecutive iterations.
RefinementTrace refine(const MpMatrix& M, const SvdTriplet& T0, unsigned p,
                       const PrecisionSchedule& schedule, const StopRule& stop);

}  // namespace svdref

#endif
