#ifndef SVDREF_GENERATORS_HPP
#define SVDREF_GENERATORS_HPP

#include "svdref/mp_matrix.hpp"

#include <cstdint>
#include <vector>

namespace svdref {

// Cauchy matrix (1/(i+j))_{1<=i,j<=n}, entries rounded once at `bits`.
MpMatrix gen_cauchy(index_t n, prec_t bits);

// i.i.d. complex standard normal entries (real and imaginary parts each
// N(0,1), so E|z|^2 = 2), Box-Muller over a seeded mt19937_64, identical
// output for identical seeds on any platform.
MpMatrix gen_random(index_t m, index_t n, prec_t bits, std::uint64_t seed);

struct PrescribedMatrix {
    MpMatrix M;                           // 4n x 4n
    std::vector<MpReal> reference_sigma;  // descending: n triples 2^i, n singles 2^-i
};

// M = U Sigma V with U, V random unitary (orthonormalized complex
// Gaussians at `bits`); the spectrum has n triples at 2^i and n simple
// values at 2^-i.
PrescribedMatrix gen_prescribed(index_t n, prec_t bits, std::uint64_t seed);

// Random Stiefel m x k factor: orthonormalized complex Gaussian columns.
MpMatrix gen_random_stiefel(index_t m, index_t k, prec_t bits, std::uint64_t seed);

}  // namespace svdref

#endif
