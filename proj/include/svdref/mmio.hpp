#ifndef SVDREF_MMIO_HPP
#define SVDREF_MMIO_HPP

#include "svdref/mp_matrix.hpp"
#include "svdref/triplet.hpp"

#include <filesystem>
#include <string>

namespace svdref {

// Significant decimal digits guaranteeing round-trip of a `bits`-bit value.
int roundtrip_digits(prec_t bits);

// Matrix Market dense array format ("matrix array complex general").
void write_matrix_market(const std::filesystem::path& path, const MpMatrix& M);

// Reads array-format files, real or complex, parsing entries at `bits`.
MpMatrix read_matrix_market(const std::filesystem::path& path, prec_t bits);

// Triplet directory: U.mtx, V.mtx, Sigma.txt (one decimal per line), a
// manifest with shapes/precision/mode, and SigmaBlock.mtx in cluster mode.
void write_triplet(const std::filesystem::path& dir, const SvdTriplet& T);
SvdTriplet read_triplet(const std::filesystem::path& dir);

}  // namespace svdref

#endif
