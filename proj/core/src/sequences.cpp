#include "vsqc/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "vsqc/exponent_matrix.hpp"

namespace vsqc {

namespace {

// Memo grows monotonically; guarded for concurrent callers.
std::mutex es_mutex;
std::vector<std::int64_t> es_memo{0};

std::mutex pl_mutex;
std::vector<std::int64_t> pl_memo;  // index L, valid from 2

}  // namespace

std::int64_t es_term(int n) {
    if (n < 0) throw std::invalid_argument("es_term: n must be >= 0");
    std::lock_guard lock(es_mutex);
    if (n < static_cast<int>(es_memo.size())) return es_memo[n];
    for (int m = static_cast<int>(es_memo.size()); m <= n; ++m)
        es_memo.push_back(m % 2 == 0 ? 3 * es_memo[m / 2] : es_memo[m - 1] + 1);
    return es_memo[n];
}

std::int64_t td_term(int n) {
    if (n < 0) throw std::invalid_argument("td_term: n must be >= 0");
    const std::int64_t magnitude = 6 * es_term(n / 4) + n % 4;
    return (n % 2 == 0) ? -magnitude : magnitude;
}

std::int64_t td_circ_size(int L) {
    if (L < 2) throw std::invalid_argument("td_circ_size: L must be >= 2");
    std::lock_guard lock(pl_mutex);
    if (pl_memo.size() < 3) pl_memo = {0, 0, 3};
    if (L < static_cast<int>(pl_memo.size())) return pl_memo[L];
    for (int m = static_cast<int>(pl_memo.size()); m <= L; ++m)
        pl_memo.push_back(m % 2 == 0 ? 3 * pl_memo[m / 2] : 3 * pl_memo[(m + 1) / 2] + m % 4 - 5);
    return pl_memo[L];
}

std::vector<std::int64_t> es_prefix(int count) {
    std::vector<std::int64_t> out(count);
    for (int i = 0; i < count; ++i) out[i] = es_term(i);
    return out;
}

std::vector<std::int64_t> td_prefix(int count) {
    std::vector<std::int64_t> out(count);
    for (int i = 0; i < count; ++i) out[i] = td_term(i);
    return out;
}

bool is_sidon(std::span<const std::int64_t> seq, std::int64_t P) {
    if (P < 1) throw std::invalid_argument("is_sidon: P must be positive");
    std::unordered_set<std::int64_t> residues;
    for (auto s : seq)
        if (!residues.insert(mod_p(s, P)).second)
            throw std::invalid_argument("is_sidon: entries must be pairwise distinct mod P");
    std::unordered_set<std::int64_t> sums;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i; j < seq.size(); ++j)
            if (!sums.insert(mod_p(seq[i] + seq[j], P)).second) return false;
    return true;
}

bool is_disjoint_difference_pair(std::span<const std::int64_t> d1, std::span<const std::int64_t> d2,
                                 std::int64_t P) {
    if (d1.size() != d2.size()) throw std::invalid_argument("difference pair: sets must have equal size");
    if (P < 1) throw std::invalid_argument("difference pair: P must be positive");
    std::unordered_set<std::int64_t> diffs;
    for (auto set : {d1, d2}) {
        std::unordered_set<std::int64_t> residues;
        for (auto s : set)
            if (!residues.insert(mod_p(s, P)).second)
                throw std::invalid_argument("difference pair: duplicate entries within a set");
        for (auto x : set)
            for (auto y : set) {
                if (x == y) continue;
                if (!diffs.insert(mod_p(x - y, P)).second) return false;
            }
    }
    return true;
}

std::vector<std::int64_t> SequenceKind::prefix(int count) const {
    switch (variant) {
        case Variant::es: return es_prefix(count);
        case Variant::td: return td_prefix(count);
        case Variant::custom:
            if (count > static_cast<int>(custom.size()))
                throw std::invalid_argument("sequence: custom list shorter than requested prefix");
            return {custom.begin(), custom.begin() + count};
    }
    throw std::logic_error("sequence: unknown variant");
}

const char* SequenceKind::name() const {
    switch (variant) {
        case Variant::es: return "es";
        case Variant::td: return "td";
        case Variant::custom: return "custom";
    }
    return "custom";
}

}  // namespace vsqc
