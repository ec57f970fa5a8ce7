#include "vsqc/equivalence.hpp"

#include <stdexcept>

namespace vsqc {

namespace {

std::vector<std::vector<std::int64_t>> outer_product(const std::vector<std::int64_t>& shifts,
                                                     const std::vector<std::int64_t>& betas) {
    std::vector<std::vector<std::int64_t>> rows(shifts.size());
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        rows[i].resize(betas.size());
        for (std::size_t r = 0; r < betas.size(); ++r) rows[i][r] = shifts[i] * betas[r];
    }
    return rows;
}

}  // namespace

ExponentMatrix to_vs_odd(const std::vector<std::int64_t>& alphas, const std::vector<std::int64_t>& betas) {
    const int J = static_cast<int>(alphas.size());
    if (J < 3 || J % 2 == 0) throw std::invalid_argument("to_vs_odd: requires odd J >= 3");
    if (betas.empty()) throw std::invalid_argument("to_vs_odd: empty betas");
    const int c = (J - 1) / 2;
    for (int i = 0; i < c; ++i)
        if (alphas[i] + alphas[J - 1 - i] != 2 * alphas[c])
            throw std::invalid_argument("to_vs_odd: shifts are not symmetric about the centre");

    std::vector<std::int64_t> shifts;
    shifts.reserve(J);
    shifts.push_back(0);
    for (int m = c + 1; m < J; ++m) shifts.push_back(alphas[m] - alphas[c]);
    for (int m = c + 1; m < J; ++m) shifts.push_back(-(alphas[m] - alphas[c]));
    return ExponentMatrix::from_rows(outer_product(shifts, betas));
}

ExponentMatrix to_vs_even(const std::vector<std::int64_t>& alphas, const std::vector<std::int64_t>& betas) {
    const int J = static_cast<int>(alphas.size());
    if (J < 4 || J % 2 == 1) throw std::invalid_argument("to_vs_even: requires even J >= 4");
    if (betas.empty()) throw std::invalid_argument("to_vs_even: empty betas");
    const std::int64_t sum = alphas[0] + alphas[J - 1];
    for (int i = 0; i < J / 2; ++i)
        if (alphas[i] + alphas[J - 1 - i] != sum)
            throw std::invalid_argument("to_vs_even: pair sums are not constant");
    if (sum % 2 != 0)
        throw std::invalid_argument("to_vs_even: pair sum is odd, no integer centre exists");
    const std::int64_t x = sum / 2;

    std::vector<std::int64_t> shifts;
    shifts.reserve(J);
    for (int m = J / 2; m < J; ++m) shifts.push_back(alphas[m] - x);
    for (int m = J / 2; m < J; ++m) shifts.push_back(-(alphas[m] - x));
    return ExponentMatrix::from_rows(outer_product(shifts, betas));
}

ExponentMatrix to_vs_j4(const std::vector<std::int64_t>& row1, const std::vector<std::int64_t>& row2,
                        std::int64_t P) {
    if (row1.empty() || row1.size() != row2.size())
        throw std::invalid_argument("to_vs_j4: rows must be nonempty and of equal length");
    if (P < 2) throw std::invalid_argument("to_vs_j4: P must be >= 2");
    const auto L = row1.size();

    bool all_even = true;
    for (std::size_t r = 0; r < L; ++r)
        if (mod_p(row1[r] + row2[r], 2) != 0) all_even = false;
    if (!all_even && P % 2 == 0)
        throw std::invalid_argument("to_vs_j4: odd column sum with even P, no transform applies");

    std::vector<std::int64_t> a(L), b(L);
    for (std::size_t r = 0; r < L; ++r) {
        const std::int64_t s = row1[r] + row2[r];
        const std::int64_t d = row1[r] - row2[r];
        if (mod_p(s, 2) == 0) {
            a[r] = -s / 2;
            b[r] = d / 2;
        } else {
            a[r] = -(P + s) / 2;
            b[r] = (d - P) / 2;
        }
    }
    std::vector<std::int64_t> na(L), nb(L);
    for (std::size_t r = 0; r < L; ++r) {
        na[r] = -a[r];
        nb[r] = -b[r];
    }
    return ExponentMatrix::from_rows({a, b, na, nb});
}

}  // namespace vsqc
