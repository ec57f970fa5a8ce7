#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vsqc {

/// n-th term of the recursively doubled sequence: s(0)=0, s(2m)=3*s(m),
/// s(2m+1)=s(2m)+1. Strictly increasing; memoized per process (thread-safe).
std::int64_t es_term(int n);

/// n-th term of the two-direction sequence derived from es_term:
/// (-1)^(n+1) * (6*es_term(n/4) + n mod 4). Alternating signs with strictly
/// increasing magnitudes for n >= 1.
std::int64_t td_term(int n);

/// Circulant size paired with the two-direction sequence for row weight L:
/// P(2)=3, P(L)=3*P(L/2) for even L>=4, P(L)=3*P((L+1)/2)+mod(L,4)-5 for odd
/// L>=3.
std::int64_t td_circ_size(int L);

std::vector<std::int64_t> es_prefix(int count);
std::vector<std::int64_t> td_prefix(int count);

/// True iff all pairwise sums s_i+s_j (i <= j) are distinct mod P. Throws if
/// the entries themselves are not pairwise distinct mod P.
bool is_sidon(std::span<const std::int64_t> seq, std::int64_t P);

/// True iff the 2*L*(L-1) ordered within-set differences of the two size-L
/// sets are jointly distinct mod P. Throws on size mismatch or duplicate
/// entries within a set.
bool is_disjoint_difference_pair(std::span<const std::int64_t> d1, std::span<const std::int64_t> d2,
                                 std::int64_t P);

/// Column-sequence selector for the J=3 family: a named generator or an
/// explicit list.
struct SequenceKind {
    enum class Variant { es, td, custom };
    Variant variant = Variant::es;
    std::vector<std::int64_t> custom;

    static SequenceKind es() { return {Variant::es, {}}; }
    static SequenceKind td() { return {Variant::td, {}}; }
    static SequenceKind list(std::vector<std::int64_t> values) { return {Variant::custom, std::move(values)}; }

    /// First `count` terms; for custom lists `count` must not exceed the
    /// stored length.
    std::vector<std::int64_t> prefix(int count) const;
    const char* name() const;
};

}  // namespace vsqc
