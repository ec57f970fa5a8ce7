#pragma once

#include <cstdint>
#include <vector>

#include "vsqc/exponent_matrix.hpp"

namespace vsqc {

/// Transforms the odd-height product matrix [alpha_0..alpha_{J-1}]^T * betas
/// into its equivalent VS form [0, a, -a]^T * betas.
///
/// Requires J >= 3 odd and the shift symmetry
/// alpha_i + alpha_{J-1-i} == 2*alpha_{(J-1)/2} for 0 <= i < (J-1)/2;
/// a_m = alpha_{(J-1)/2 + m} - alpha_{(J-1)/2}.
ExponentMatrix to_vs_odd(const std::vector<std::int64_t>& alphas, const std::vector<std::int64_t>& betas);

/// Even-height counterpart: requires J >= 4 even and a common even pair sum
/// alpha_i + alpha_{J-1-i} == 2x; yields [a, -a]^T * betas with
/// a_m = alpha_{J/2 + m} - x. An odd common sum is rejected (no integer x).
ExponentMatrix to_vs_even(const std::vector<std::int64_t>& alphas, const std::vector<std::int64_t>& betas);

/// Transforms a 4 x L matrix with rows [0; row1; row2; row1+row2] into its
/// VS form [a; b; -a; -b] by per-column shifts.
///
/// Column rule: when row1[r]+row2[r] is even, a(r) = -(row1[r]+row2[r])/2 and
/// b(r) = (row1[r]-row2[r])/2; odd column sums are admissible only for odd P,
/// where a(r) = -(P+row1[r]+row2[r])/2 and b(r) = (row1[r]-row2[r]-P)/2.
/// Throws when some column sum is odd and P is even.
ExponentMatrix to_vs_j4(const std::vector<std::int64_t>& row1, const std::vector<std::int64_t>& row2,
                        std::int64_t P);

}  // namespace vsqc
