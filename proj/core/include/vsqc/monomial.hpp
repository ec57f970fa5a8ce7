#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsqc/exponent_matrix.hpp"

namespace vsqc {

/// Matrix of the form [a_0,...,a_{J-1}]^T * [0,1,...,L-1]: each row i is the
/// arithmetic progression a_i * r over the column index r.
struct MonomialRowMatrix {
    std::vector<std::int64_t> shifts;
    int cols = 0;

    ExponentMatrix expand() const;
};

/// Subtracts the first shift from all shifts ("S"); cycle distribution is
/// preserved for every circulant size.
MonomialRowMatrix shift_transform(const MonomialRowMatrix& m);

/// Maps shifts [a_0..a_i] to [a_i-a_i, a_i-a_{i-1}, ..., a_i-a_0] ("R");
/// cycle-distribution preserving.
MonomialRowMatrix reverse_transform(const MonomialRowMatrix& m);

/// Divides all shifts by d ("/d"); requires gcd(d,P) = 1 and exact division
/// of every shift.
MonomialRowMatrix divide_transform(const MonomialRowMatrix& m, std::int64_t d, std::int64_t P);

/// 6-cycle freeness of [0,a,b]^T * [0..L-1] by the magnitude/coprimality
/// argument: true iff 0 < a < b, b/gcd(b,a) >= L and P >= b(L-1)+1.
bool sixcycle_free_magnitude(std::int64_t a, std::int64_t b, std::int64_t L, std::int64_t P);

/// 6-cycle freeness of [0,a,b]^T * [0..L-1] by the common-divisor argument:
/// true iff gcd(a,c) = c, gcd(b,c) = 1 and gcd(P,c) = c.
bool sixcycle_free_divisor(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t P);

/// One audited row-triple reduction: a triple of row shifts taken from the
/// J=6 construction for mod(L,6)=4, the S/R//d steps that reduce it, and the
/// freeness predicate certifying the terminal form at P = (L+1)(L+5).
struct TripleReduction {
    int index = 0;                           // 1-based row number
    std::vector<std::int64_t> original;      // triple before reduction
    std::vector<std::string> steps;          // "S", "R", "/2", ...
    std::vector<std::int64_t> terminal;      // expected reduced triple
    std::string predicate;                   // "magnitude" or "divisor"
    std::vector<std::int64_t> params;        // (a,b) or (a,b,c)
    bool pass = false;
    std::string trace;                       // human-readable replay
};

struct TripleReductionReport {
    std::int64_t L = 0;
    std::int64_t P = 0;
    std::vector<TripleReduction> rows;
    bool all_pass() const;
};

/// Replays, for mod(L,6) = 4, the reduction of all 20 row triples of the
/// J=6 shift set {0, 2, L+3, L+7, 2L+8, 2L+10} to forms certified 6-cycle
/// free at P = (L+1)(L+5). Step lists are stored verbatim as data; failures
/// are reported per row, not thrown.
TripleReductionReport audit_triple_reductions(std::int64_t L);

}  // namespace vsqc
