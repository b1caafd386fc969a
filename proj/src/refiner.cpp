#include "svdref/refiner.hpp"

#include <sstream>

namespace svdref {

namespace {

prec_t working_prec(const SvdTriplet& T, const MpMatrix& M) {
    prec_t p = T.U.precision_bits();
    if (M.precision_bits() > p) p = M.precision_bits();
    return p;
}

// Entrywise sum preserving exact skew-Hermitian mirroring (mpfr rounding
// commutes with negation and conjugation).
MpMatrix add_plain(const MpMatrix& A, const MpMatrix& B) { return add(A, B); }

// Sigma 'diag' update helpers.
DiagonalMatrix updated_sigma_regular(const DiagonalMatrix& sigma, const MpMatrix& S_total,
                                     prec_t bits) {
    DiagonalMatrix out(sigma.ell(), sigma.q(), bits);
    for (index_t i = 0; i < sigma.q(); ++i)
        out.set_value(i, sigma.value(i).round_to(bits) + S_total(i, i).real());
    return out;
}

}  // namespace

long e_index(const MpReal& epsilon, const MpReal& u0) {
    if (epsilon.is_zero()) return kEIndexExact;
    return -floor(log2(epsilon / u0)).to_long();
}

Certificate certify(const SvdTriplet& T, const MpMatrix& M, unsigned p) {
    T.validate();
    const prec_t bits = working_prec(T, M);
    const OrderConstants C(p);
    Certificate cert;
    cert.p = p;
    cert.a = C.a(bits);
    cert.u0 = C.u0(bits);
    cert.gamma1 = C.gamma1(bits);
    cert.sigma_const = C.sigma_const(bits);

    cert.kappa_val = (T.mode == TripletMode::Cluster) ? kappa_cluster(T.sigma, *T.partition)
                                                      : kappa(T.sigma);
    if (cert.kappa_val.is_inf()) {
        if (T.mode == TripletMode::Regular)
            throw CertificationError(
                "certify: infinite kappa (repeated or zero singular value); "
                "switch to cluster mode or deflate",
                cert);
        throw CertificationError("certify: infinite cluster kappa", cert);
    }
    cert.k_val = big_k(T.sigma);

    cert.delta_norm = paper_norm(svd_residual_dense(M, T.U, T.V, T.sigma_matrix()));
    cert.eu_norm = paper_norm(residual_E(T.U));
    cert.ev_norm = paper_norm(residual_E(T.V));

    const MpReal kK_a = C.pow_a(cert.kappa_val * cert.k_val);
    const MpReal head = C.pow_a(cert.kappa_val) * C.pow_a_minus_1(cert.k_val);
    cert.epsilon = max(max(kK_a * cert.eu_norm, kK_a * cert.ev_norm), head * cert.delta_norm);
    cert.pass = cert.epsilon <= cert.u0;
    return cert;
}

std::pair<SvdTriplet, StepReport> hp_step(const SvdTriplet& T, const MpMatrix& M, unsigned p) {
    if (p < 1) throw Error("hp_step: p >= 1 required");
    T.validate();
    const prec_t bits = working_prec(T, M);
    const bool cluster = T.mode == TripletMode::Cluster;

    const MpMatrix U = T.U.round_to(bits);
    const MpMatrix V = T.V.round_to(bits);
    const DiagonalMatrix sigma = T.sigma.round_to(bits);
    const MpMatrix Sig = cluster ? T.sigma_block.round_to(bits) : sigma.to_matrix();

    const std::vector<MpReal> s_coeffs = sp_coefficients(p);
    const std::vector<MpReal> c_coeffs = cp_coefficients(p);

    StepReport rep;

    // Stiefel corrections.
    const MpMatrix Omega = hermitize(TruncatedSeries::eval_poly(s_coeffs, residual_E(U)));
    const MpMatrix Lambda = hermitize(TruncatedSeries::eval_poly(s_coeffs, residual_E(V)));
    rep.omega_norm = paper_norm(Omega);
    rep.lambda_norm = paper_norm(Lambda);

    // Delta_1 = (I + Omega)(Delta + Sigma)(I + Lambda) - Sigma,
    // where Delta + Sigma = U* M V.
    const MpMatrix UMV = mul(adjoint(U), mul(M.round_to(bits), V));
    const MpMatrix D1_core = mul(mul(add_identity(Omega), UMV), add_identity(Lambda));
    const MpMatrix Delta1 = sub(D1_core, Sig);

    MpMatrix X_sum = MpMatrix::zeros(T.ell(), T.ell(), bits);
    MpMatrix Y_sum = MpMatrix::zeros(T.q(), T.q(), bits);
    MpMatrix S_total = MpMatrix::zeros(T.ell(), T.q(), bits);
    MpMatrix Theta, Psi;

    MpMatrix Delta_k = Delta1;
    for (unsigned k = 1; k <= p + 1; ++k) {
        rep.delta_norms.push_back(paper_norm(Delta_k));
        if (k == p + 1) break;

        CouplingSolution sol;
        try {
            sol = cluster ? solve_cluster(Delta_k, sigma, *T.partition)
                          : solve_regular(Delta_k, sigma);
        } catch (const DegenerateSpectrumError& e) {
            throw DegenerateSpectrumError(std::string(e.what()) +
                                              "; switch to cluster mode or deflate",
                                          e.index_i, e.index_j);
        }
        S_total = add_plain(S_total, sol.S);
        X_sum = add_plain(X_sum, sol.X);
        Y_sum = add_plain(Y_sum, sol.Y);

        Theta = TruncatedSeries::eval_poly(c_coeffs, X_sum);
        Psi = TruncatedSeries::eval_poly(c_coeffs, Y_sum);

        // Delta_{k+1} = (I + Theta_k*)(Delta_1 + Sigma)(I + Psi_k) - Sigma - sum S_j
        MpMatrix next = mul(mul(add_identity(adjoint(Theta)), D1_core), add_identity(Psi));
        Delta_k = sub(sub(next, Sig), S_total);
    }
    rep.theta_norm = paper_norm(Theta);
    rep.psi_norm = paper_norm(Psi);
    rep.s_norm = paper_norm(S_total);

    SvdTriplet out;
    out.U = mul(mul(U, add_identity(Omega)), add_identity(Theta));
    out.V = mul(mul(V, add_identity(Lambda)), add_identity(Psi));
    out.mode = T.mode;
    out.partition = T.partition;
    if (cluster) {
        out.sigma_block = add(Sig, S_total);
        DiagonalMatrix s(T.ell(), T.q(), bits);
        for (index_t i = 0; i < T.q(); ++i) s.set_value(i, out.sigma_block(i, i).real());
        out.sigma = std::move(s);
    } else {
        out.sigma = updated_sigma_regular(sigma, S_total, bits);
        if (!out.sigma.strictly_descending_positive())
            throw DegenerateSpectrumError(
                "hp_step: updated spectrum lost strict descending order; "
                "switch to cluster mode or deflate",
                0, 0);
    }
    out.validate();
    return {std::move(out), std::move(rep)};
}

namespace {

// Shared tail of the Davies-Smith variants: the coupled pair
// (S_i, X_i, Y_i), i = 1, 2, of equations (2.2)-(2.3).
struct DsParts {
    CouplingSolution first, second;
    MpMatrix X, Y;   // X_1 + X_2, Y_1 + Y_2
    MpMatrix S;      // S_1 + S_2
    MpReal eps1;
};

DsParts ds_parts(const SvdTriplet& T, const MpMatrix& M, prec_t bits) {
    if (T.mode != TripletMode::Regular) throw Error("Davies-Smith maps: regular mode only");
    T.validate();
    const MpMatrix Delta =
        svd_residual_dense(M.round_to(bits), T.U.round_to(bits), T.V.round_to(bits),
                           T.sigma.round_to(bits).to_matrix());
    DsParts parts;
    parts.eps1 = paper_norm(Delta);
    parts.first = solve_regular(Delta, T.sigma);
    // Delta_2 = -1/2 X_1 (Delta + S_1) + 1/2 (Delta + S_1) Y_1
    const MpMatrix DpS = add(Delta, parts.first.S);
    const MpReal half(0.5, bits);
    const MpMatrix Delta2 =
        add(scale(mul(parts.first.X, DpS), -half), scale(mul(DpS, parts.first.Y), half));
    parts.second = solve_regular(Delta2, T.sigma);
    parts.X = add(parts.first.X, parts.second.X);
    parts.Y = add(parts.first.Y, parts.second.Y);
    parts.S = add(parts.first.S, parts.second.S);
    return parts;
}

SvdTriplet ds_finish(const SvdTriplet& T, const DsParts& parts, MpMatrix Gamma, MpMatrix K1,
                     prec_t bits) {
    SvdTriplet out;
    out.U = mul(T.U.round_to(bits), Gamma);
    out.V = mul(T.V.round_to(bits), K1);
    out.sigma = updated_sigma_regular(T.sigma.round_to(bits), parts.S, bits);
    out.validate();
    return out;
}

MpReal ds_hypothesis(const SvdTriplet& T, const MpReal& eps1, unsigned kappa_num,
                     unsigned kappa_den, unsigned k_num, unsigned k_den) {
    const MpReal kap = kappa(T.sigma);
    const MpReal K = big_k(T.sigma);
    return OrderConstants::pow_ratio(kap, kappa_num, kappa_den) *
           OrderConstants::pow_ratio(K, k_num, k_den) * eps1;
}

}  // namespace

std::pair<SvdTriplet, DsReport> ds_step(const SvdTriplet& T, const MpMatrix& M) {
    const prec_t bits = working_prec(T, M);
    DsParts parts = ds_parts(T, M, bits);
    const MpReal half(0.5, bits);
    // Gamma_1 = I + X + 1/2 X_1^2, K_1 = I + Y + 1/2 Y_1^2
    MpMatrix Gamma = add_identity(add(parts.X, scale(mul(parts.first.X, parts.first.X), half)));
    MpMatrix K1 = add_identity(add(parts.Y, scale(mul(parts.first.Y, parts.first.Y), half)));
    SvdTriplet out = ds_finish(T, parts, std::move(Gamma), std::move(K1), bits);

    DsReport rep;
    rep.eps1 = parts.eps1;
    rep.hypothesis = ds_hypothesis(T, parts.eps1, 5, 4, 2, 5);
    rep.residual_norm =
        paper_norm(svd_residual_dense(M.round_to(bits), out.U, out.V, out.sigma.to_matrix()));
    return {std::move(out), std::move(rep)};
}

std::pair<SvdTriplet, DsReport> ds_revisited_step(const SvdTriplet& T, const MpMatrix& M) {
    const prec_t bits = working_prec(T, M);
    DsParts parts = ds_parts(T, M, bits);
    const std::vector<MpReal> c2 = cp_coefficients(2);
    MpMatrix Theta2 = add_identity(TruncatedSeries::eval_poly(c2, parts.X));
    MpMatrix Psi2 = add_identity(TruncatedSeries::eval_poly(c2, parts.Y));
    SvdTriplet out = ds_finish(T, parts, std::move(Theta2), std::move(Psi2), bits);

    DsReport rep;
    rep.eps1 = parts.eps1;
    rep.hypothesis = ds_hypothesis(T, parts.eps1, 6, 5, 3, 10);
    rep.residual_norm =
        paper_norm(svd_residual_dense(M.round_to(bits), out.U, out.V, out.sigma.to_matrix()));
    return {std::move(out), std::move(rep)};
}

prec_t PrecisionSchedule::bits_for(unsigned iteration, unsigned p) const {
    if (!geometric || iteration == 0) return base_bits;
    long double b = static_cast<long double>(base_bits);
    for (unsigned i = 0; i < iteration; ++i) {
        b *= (p + 1);
        if (b > 1e9L) throw Error("PrecisionSchedule: bits exceed practical range");
    }
    return static_cast<prec_t>(b);
}

RefinementTrace refine(const MpMatrix& M, const SvdTriplet& T0, unsigned p,
                       const PrecisionSchedule& schedule, const StopRule& stop) {
    RefinementTrace trace;
    trace.order_p = p;

    OpCounter ops;
    CountingScope scope(ops);

    Certificate cert = certify(T0, M, p);
    trace.initial = cert;
    if (!cert.pass)
        throw CertificationError("refine: certification failed, epsilon = " +
                                     cert.epsilon.to_string(6) + " > u0 = " + cert.u0.to_string(4),
                                 cert);

    auto push_row = [&](unsigned i, const Certificate& c, prec_t bits) {
        TraceRow row;
        row.iteration = i;
        row.epsilon = c.epsilon;
        row.e_idx = e_index(c.epsilon, c.u0);
        row.delta_norm = c.delta_norm;
        row.eu_norm = c.eu_norm;
        row.ev_norm = c.ev_norm;
        row.bits = bits;
        row.ops = ops;
        trace.rows.push_back(std::move(row));
    };
    push_row(0, cert, T0.U.precision_bits());

    SvdTriplet T = T0;
    MpReal prev_eps = cert.epsilon;
    unsigned stalled = 0;
    for (unsigned i = 1; i <= stop.max_iter; ++i) {
        if (stop.target_eps && prev_eps <= *stop.target_eps) break;
        if (prev_eps.is_zero()) break;

        const prec_t bits = schedule.bits_for(i, p);
        T = T.round_to(bits);
        auto [next, rep] = hp_step(T, M, p);
        T = std::move(next);
        trace.steps.push_back(std::move(rep));

        Certificate ci = certify(T, M, p);
        push_row(i, ci, bits);

        // The theorem guarantees at least halving while certified; two
        // consecutive violations signal precision exhaustion or a bad start.
        if (!(ci.epsilon <= prev_eps * MpReal(0.5, bits))) {
            if (++stalled >= 2)
                throw DivergenceError("refine: epsilon failed to halve twice in a row", trace);
        } else {
            stalled = 0;
        }
        prev_eps = ci.epsilon;
    }
    return trace;
}

std::string RefinementTrace::to_csv() const {
    std::ostringstream os;
    os << "iteration,order,e_i,epsilon_i,bits,mults\n";
    for (const TraceRow& r : rows) {
        os << r.iteration << ',' << order_p << ',';
        if (r.e_idx == kEIndexExact)
            os << "inf";
        else
            os << r.e_idx;
        os << ',' << r.epsilon.to_string(12) << ',' << r.bits << ',' << r.ops.matrix_mults << "\n";
    }
    return os.str();
}

std::string RefinementTrace::to_table() const {
    std::ostringstream os;
    os << "Iterations/Order\t" << order_p + 1 << "\n";
    for (const TraceRow& r : rows) {
        os << r.iteration << "\t";
        if (r.e_idx == kEIndexExact)
            os << "inf";
        else
            os << r.e_idx;
        os << "\n";
    }
    return os.str();
}

}  // namespace svdref
