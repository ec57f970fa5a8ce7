#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vsqc/exponent_matrix.hpp"
#include "vsqc/girth.hpp"

// Test-side oracles, deliberately written as plain exhaustive enumeration so
// they stay independent of the library's search strategies.
namespace testsupport {

/// Exhaustive 2k-cycle existence: every row/column sequence with cyclic
/// adjacency, alternating sum tested directly.
bool brute_has_cycle(const vsqc::ExponentMatrix& E, std::int64_t P, int k,
                     const vsqc::Mask* mask = nullptr);

/// Smallest cycle length <= cap by exhaustive enumeration, else cap+2.
int brute_girth(const vsqc::ExponentMatrix& E, std::int64_t P, int cap,
                const vsqc::Mask* mask = nullptr);

/// Exact number of distinct 2k-cycles for k in {2,3} (solution tuples divided
/// by the 2k-fold rotation/reflection orbit, which is free for these k).
std::int64_t brute_count_cycles(const vsqc::ExponentMatrix& E, std::int64_t P, int k,
                                const vsqc::Mask* mask = nullptr);

/// Greedy Sidon set over Z_P: repeatedly adds the smallest residue that
/// keeps all pairwise sums (i <= j) distinct mod P, up to `count` elements.
std::vector<std::int64_t> greedy_sidon(std::int64_t P, int count);

vsqc::ExponentMatrix random_matrix(std::mt19937_64& rng, int J, int L, std::int64_t span);

/// Random mask with no all-zero row or column.
vsqc::Mask random_mask(std::mt19937_64& rng, int J, int L, double keep_probability);

struct ParsedAlist {
    std::int64_t n = 0, m = 0;
    std::vector<std::vector<std::int64_t>> col_neighbors;  // 1-based check ids
    std::vector<std::vector<std::int64_t>> row_neighbors;  // 1-based var ids
};

ParsedAlist parse_alist(const std::string& text);

}  // namespace testsupport
