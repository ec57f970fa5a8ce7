#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vsqc/exponent_matrix.hpp"
#include "vsqc/girth.hpp"

namespace vsqc {

/// Number of independent row multipliers for column weight J in the
/// geometric-column family: rows of the upper part are alpha_i * beta^r for
/// 0 <= i <= floor((J-2)/2), alpha_0 = 1.
inline int upper_row_count(int J) { return (J - 2) / 2 + 1; }

/// VS completion of the geometric-column family: upper rows
/// alpha_i * beta^r (reduced mod P), negated lower block, and an all-zero
/// top row when J is odd.
ExponentMatrix vs_complete(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                           std::int64_t P);

/// No 4-cycles in the VS completion: no family
///   (alpha_i - alpha_j)(beta^r - beta^s),  0 <= i < j  (upper/upper)
///   (alpha_i + alpha_j)(beta^r - beta^s),  0 <= i <= j (upper/lower)
///   alpha_i (beta^r - beta^s),             odd J only  (zero row)
/// has a solution == 0 mod P over 0 <= r < s <= L-1.
bool fourcycle_free(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                    std::int64_t P);

/// No 6-cycles in the VS completion; the five coefficient families span all
/// placements of three rows across the zero/upper/lower parts.
bool sixcycle_free(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                   std::int64_t P);

inline bool girth8_conditions(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                              std::int64_t P) {
    return fourcycle_free(alphas, beta, J, L, P) && sixcycle_free(alphas, beta, J, L, P);
}

struct SearchSpec {
    int J = 4;  // 4..7
    int L = 0;
    std::int64_t p_lo = 2;
    std::int64_t p_hi = 0;  // inclusive
    // 0 = full default 2..P-1, applied per P
    std::int64_t alpha_lo = 0, alpha_hi = 0;
    std::int64_t beta_lo = 0, beta_hi = 0;
    bool exhaustive_per_p = false;  // otherwise stop at first lex hit per P
    int jobs = 0;
};

struct SearchHit {
    std::int64_t P = 0;
    std::vector<std::int64_t> alphas;  // [1, alpha_1, ...]
    std::int64_t beta = 0;
    ExponentMatrix matrix;             // VS completion
};

struct SearchOutcome {
    std::optional<SearchHit> hit;      // lex-first tuple at the smallest P
    std::vector<SearchHit> hits_at_p;  // exhaustive mode: all hits at that P
    std::int64_t p_lo = 0, p_hi = 0;   // range actually covered
    std::uint64_t tuples_tested = 0;
};

/// Minimum-circulant search: P ascending, (alpha_1..alpha_J0, beta) in
/// lexicographic order per P; a tuple is accepted when it passes both
/// cycle-freeness checks and the graph oracle confirms girth exactly 8.
/// Parallel over P; a hit at P cancels work only for P' > P, so the result
/// is deterministic.
SearchOutcome search_min_p(const SearchSpec& spec);

/// One published benchmark row: our circulant size and multipliers, plus
/// the competing published sizes where available.
struct TableRow {
    int L = 0;
    std::int64_t p_new = 0;
    std::vector<std::int64_t> params;  // [alpha_1(, alpha_2), beta]
    std::optional<std::int64_t> p_hs;
    std::optional<std::int64_t> p_irs;
};

std::span<const TableRow> published_rows(int J);  // J in {4,5,6}

struct TableCheck {
    TableRow row;
    bool pass = false;                  // checks + both girth engines agree on 8
    std::optional<std::int64_t> p_ours; // filled when rerun_search
};

/// Verifies every published (L, P, params) row: cycle-freeness conditions
/// plus girth exactly 8 by both engines; optionally reruns the search to
/// report our own minimum alongside.
std::vector<TableCheck> reproduce_tables(int J, bool rerun_search = false, int jobs = 0);

}  // namespace vsqc
