#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vsqc/exponent_matrix.hpp"

namespace vsqc {

/// Sparse JP x LP parity-check matrix described blockwise: block (i,r) is
/// the P x P identity with rows cyclically right-shifted by shift(i,r), or
/// absent where masked. Check node (i,t) is adjacent to variable node
/// (r, (t + shift(i,r)) mod P) for every present block.
class LiftedCode {
public:
    LiftedCode(const ExponentMatrix& E, std::int64_t P, const Mask* mask = nullptr);

    int block_rows() const { return J_; }
    int block_cols() const { return L_; }
    std::int64_t circulant() const { return P_; }

    bool present(int i, int r) const { return present_[static_cast<std::size_t>(i) * L_ + r] != 0; }
    std::int64_t shift(int i, int r) const { return shifts_[static_cast<std::size_t>(i) * L_ + r]; }

    std::int64_t num_vars() const { return static_cast<std::int64_t>(L_) * P_; }
    std::int64_t num_checks() const { return static_cast<std::int64_t>(J_) * P_; }
    std::int64_t num_edges() const;

private:
    int J_ = 0;
    int L_ = 0;
    std::int64_t P_ = 0;
    std::vector<std::int64_t> shifts_;    // mod P
    std::vector<std::uint8_t> present_;
};

/// Replaces each entry of E by its circulant at size P (>= 2); blocks under
/// mask zeros are absent.
LiftedCode lift(const ExponentMatrix& E, std::int64_t P, const Mask* mask = nullptr);

/// Searches for a cycle of length 2k (k >= 2) in the Tanner graph of
/// (E, P, mask) by solving the blockwise alternating-sum condition. Returns
/// the lexicographically first witness (rows sequence compared first, then
/// columns), or nullopt. Throws for k < 2.
std::optional<CycleWitness> find_cycle(const ExponentMatrix& E, std::int64_t P, int k,
                                       const Mask* mask = nullptr);

/// Exact number of distinct 2k-cycles for k in {2,3} (each geometric cycle
/// counted once). Exposed for diagnostics and distribution comparisons.
std::int64_t count_cycles(const ExponentMatrix& E, std::int64_t P, int k, const Mask* mask = nullptr);

struct GirthReport {
    int girth = 0;   // smallest cycle length found, or cap+2 lower bound
    bool exact = false;  // false means "no cycle of length <= cap": girth >= cap+2
    int cap = 12;
    std::optional<CycleWitness> witness;

    bool is(int g) const { return exact && girth == g; }
};

/// Girth by the modular cycle-equation engine: smallest 2k <= cap with a
/// cycle, with a deterministic witness; otherwise an inexact report with
/// girth = cap+2 (no cycle of length <= cap exists). cap must be even,
/// 4 <= cap <= 16.
GirthReport girth_from_equations(const ExponentMatrix& E, std::int64_t P, int cap = 12,
                                 const Mask* mask = nullptr);

/// Independent oracle: exact Tanner-graph girth up to cap via truncated BFS
/// over the lifted graph, one root per variable block (cyclic-shift
/// symmetry). Reconstructs a witness for the shortest cycle found.
GirthReport girth_from_graph(const LiftedCode& code, int cap = 12);

inline GirthReport girth_from_graph(const ExponentMatrix& E, std::int64_t P, int cap = 12,
                                    const Mask* mask = nullptr) {
    return girth_from_graph(lift(E, P, mask), cap);
}

}  // namespace vsqc
