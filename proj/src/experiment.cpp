#include "svdref/experiment.hpp"

#include "svdref/generators.hpp"
#include "svdref/jacobi_svd.hpp"

#include <iomanip>
#include <sstream>

namespace svdref {

namespace {

MpMatrix generate(const ExperimentConfig& cfg) {
    switch (cfg.family) {
        case Family::Cauchy:
            return gen_cauchy(cfg.size, cfg.base_bits);
        case Family::Prescribed:
            return gen_prescribed(cfg.size, cfg.base_bits, cfg.seed).M;
        case Family::Random:
        default:
            return gen_random(cfg.size, cfg.size, cfg.base_bits, cfg.seed);
    }
}

template <typename F>
auto staged(const char* stage, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error("experiment[" + std::string(stage) + "]: " + e.what());
    }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.size < 1 || cfg.orders.empty()) throw Error("run_experiment: invalid config");
    ExperimentResult result;
    result.config = cfg;

    const MpMatrix M = staged("generate", [&] { return generate(cfg); });
    const SvdTriplet T0 = staged("init", [&] { return init_svd(M, cfg.base_bits); });

    for (unsigned p : cfg.orders) {
        ExperimentCell cell;
        cell.order_p = p;
        DeflationResult defl = staged("deflate", [&] { return deflate(T0, M, p); });
        cell.deflation_q = defl.index_q;
        cell.deflation_e = defl.quantity_e;

        PrecisionSchedule sched;
        sched.base_bits = cfg.base_bits;
        StopRule stop;
        stop.max_iter = cfg.iterations;
        cell.trace = staged("refine", [&] { return refine(M, defl.deflated, p, sched, stop); });
        result.cells.push_back(std::move(cell));
    }
    return result;
}

std::string ExperimentResult::to_csv() const {
    std::ostringstream os;
    os << "iteration,order,e_i,epsilon_i,bits,mults\n";
    for (const ExperimentCell& c : cells)
        for (const TraceRow& r : c.trace.rows) {
            os << r.iteration << ',' << c.order_p << ',';
            if (r.e_idx == kEIndexExact)
                os << "inf";
            else
                os << r.e_idx;
            os << ',' << r.epsilon.to_string(12) << ',' << r.bits << ',' << r.ops.matrix_mults
               << "\n";
        }
    return os.str();
}

std::string ExperimentResult::to_table() const {
    std::ostringstream os;
    os << "Iterations/Order";
    for (const ExperimentCell& c : cells) os << '\t' << c.order_p + 1;
    os << '\n';
    std::size_t depth = 0;
    for (const ExperimentCell& c : cells) depth = std::max(depth, c.trace.rows.size());
    for (std::size_t i = 0; i < depth; ++i) {
        os << i;
        for (const ExperimentCell& c : cells) {
            os << '\t';
            if (i < c.trace.rows.size()) {
                const long e = c.trace.rows[i].e_idx;
                if (e == kEIndexExact)
                    os << "inf";
                else
                    os << e;
            } else {
                os << '-';
            }
        }
        os << '\n';
    }
    os << "deflation";
    for (const ExperimentCell& c : cells) os << '\t' << "q=" << c.deflation_q;
    os << '\n';
    return os.str();
}

}  // namespace svdref
