#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsqc/exponent_matrix.hpp"
#include "vsqc/girth.hpp"
#include "vsqc/sequences.hpp"

namespace vsqc {

enum class Method { j3_betas, j3_es, j3_td, j4_gcd, j4_dds, j4_maxfn, j6_family, custom };

/// CLI-facing method token ("theorem1", "es", "td", "gcd", "dds", "maxfn",
/// "theorem2", "custom").
std::string to_string(Method m);

struct Provenance {
    int L = 0;
    std::string sequence;                 // column sequence used, if any
    int case_index = 0;                   // 1..4 for the J=6 family, else 0
    std::optional<GirthReport> girth;     // filled for conjectural methods
    std::string note;
};

/// A constructed (exponent matrix, circulant size) pair. For proven methods
/// the pair is girth-8 by construction; conjectural methods carry their
/// verification outcome in provenance instead of throwing.
struct ConstructionResult {
    ExponentMatrix matrix;
    std::int64_t P = 0;
    Method method = Method::custom;
    Provenance provenance;
};

/// Admissibility of a column sequence for the J=3 family [0,1,-1]^T * betas:
/// (1) doubled entries pairwise distinct mod P and (2) no doubled entry
/// equals the sum of two others mod P. Throws when the entries themselves
/// collide mod P.
bool j3_betas_admissible(std::span<const std::int64_t> betas, std::int64_t P);

/// J=3 family from explicit betas (L >= 3); requires j3_betas_admissible.
ConstructionResult construct_j3(const std::vector<std::int64_t>& betas, std::int64_t P);

/// J=3 family over the first L terms of the doubling sequence at
/// P = 2*es_term(L-1)+1.
ConstructionResult construct_es(int L);

/// J=3 family over the first L terms of the two-direction sequence at
/// P = td_circ_size(L). The pairing is conjectural: the girth checker runs
/// and its outcome lands in provenance (never throws on girth < 8).
ConstructionResult construct_td(int L);

struct SweepFailure {
    std::int64_t P = 0;
    int L = 0;
    GirthReport report;
};

struct SweepReport {
    std::string description;
    std::int64_t checked = 0;
    std::vector<SweepFailure> failures;
    bool clean() const { return failures.empty(); }
};

/// Checks girth == 8 of [0,1,-1]^T * seq(L) for every odd P in [P_x, P_hi],
/// P_x = 2*es_term(L-1)+1. A P_hi below P_x yields an empty sweep.
SweepReport sweep_odd_circulants(int L, const SequenceKind& seq, std::int64_t P_hi, int jobs = 0);

/// Checks girth == 8 of the two-direction construction at P(L) for every
/// 3 <= L <= L_max.
SweepReport sweep_td_range(int L_lo, int L_hi, int jobs = 0);

/// J=4 family [a,-a]^T * [0..L-1] with a = [(L-1)/2, (L+1)/2]; requires odd
/// L >= 3 and P >= L^2.
ConstructionResult construct_gcd_j4(int L, std::int64_t P);

/// J=4 family from a disjoint-difference pair at odd P (column transform of
/// the source rows [0; d1; d2; d1+d2]).
ConstructionResult construct_dds_j4(const std::vector<std::int64_t>& d1,
                                    const std::vector<std::int64_t>& d2, std::int64_t P);

/// Smallest admissible odd circulant size of the max-increment J=4 family.
std::int64_t maxfn_min_p(int L);

/// J=4 family with second row r and third row accumulating max(r+2, L-r)
/// steps, transformed to VS form; requires odd P >= ceil(3L^2/4)+L-1, L >= 2.
ConstructionResult construct_maxfn_j4(int L, std::int64_t P);

/// J=6 family [a,-a]^T * [0..L-1] for L >= 7, with (a, P) selected by
/// mod(L,6): {0,2} -> a=[2,L+1,L+3], P=(L+2)^2+3; {1,3} -> a=[2,L,L+2],
/// P=(L+1)^2+3; {4} -> a=[2,L+3,L+5], P=(L+1)(L+5); {5} -> a=[2,L+2,L+4],
/// P=L(L+4).
ConstructionResult construct_j6(int L);

}  // namespace vsqc
