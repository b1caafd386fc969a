#ifndef SVDREF_SERIES_HPP
#define SVDREF_SERIES_HPP

#include "svdref/mp_matrix.hpp"

#include <vector>

namespace svdref {

// Truncations of the two power series driving the maps:
//   s(u) = -1 + (1+u)^{-1/2}  (Stiefel correction),
//   c(u) = (1+u^2)^{1/2} + u - 1  (unitary completion).
// All coefficients are dyadic rationals and are stored exactly; evaluation
// rounds them once into the working precision.
enum class SeriesKind { S_SERIES, C_SERIES };

class TruncatedSeries {
public:
    TruncatedSeries(SeriesKind kind, unsigned degree_p);

    SeriesKind kind() const { return kind_; }
    unsigned degree_p() const { return p_; }

    // Coefficient of u^k, 1-based power index; constant term is always 0.
    // coefficients()[k-1] is the coefficient of u^k.
    const std::vector<MpReal>& coefficients() const { return coeffs_; }

    MpMatrix evaluate(const MpMatrix& A) const { return eval_poly(coeffs_, A); }

    // Scalar evaluation with the same Horner ordering as the matrix path,
    // at the argument's precision.
    MpReal evaluate_scalar(const MpReal& u) const;

    // Horner evaluation of sum_k coeffs[k-1] * A^k (zero constant term).
    // Degree 1 is a pure scaling; degree d >= 2 uses exactly d matrix
    // multiplications.
    static MpMatrix eval_poly(const std::vector<MpReal>& coeffs, const MpMatrix& A);

private:
    SeriesKind kind_;
    unsigned p_;
    std::vector<MpReal> coeffs_;
};

// [t_1..t_p] with t_k = (-1)^k binom(2k,k) / 4^k: -1/2, 3/8, -5/16, 35/128, ...
std::vector<MpReal> sp_coefficients(unsigned p);

// Coefficients of c_p by power: 1 for u^1, c_k = (-1)^{k+1} (2k)!/(4^k (k!)^2 (2k-1))
// for u^{2k} with 2k <= p, zero elsewhere.
std::vector<MpReal> cp_coefficients(unsigned p);

// e_p(u) = c_p(u) - u  (the even tail), same indexing.
std::vector<MpReal> ep_coefficients(unsigned p);

}  // namespace svdref

#endif
