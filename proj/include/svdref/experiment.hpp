#ifndef SVDREF_EXPERIMENT_HPP
#define SVDREF_EXPERIMENT_HPP

#include "svdref/refiner.hpp"
#include "svdref/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace svdref {

enum class Family { Random, Cauchy, Prescribed };

struct ExperimentConfig {
    Family family = Family::Random;
    index_t size = 8;                 // n; the prescribed family builds a 4n x 4n matrix
    std::vector<unsigned> orders{3};  // p values
    prec_t base_bits = 64;
    unsigned iterations = 3;
    std::uint64_t seed = 1;
};

struct ExperimentCell {
    unsigned order_p = 0;
    index_t deflation_q = 0;
    MpReal deflation_e;
    RefinementTrace trace;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ExperimentCell> cells;

    std::string to_csv() const;
    std::string to_table() const;  // iterations x orders, e_i cells
};

// generate -> init_svd -> deflate -> refine, once per requested order.
// Deterministic: identical config and seed give bit-identical tables.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace svdref

#endif
