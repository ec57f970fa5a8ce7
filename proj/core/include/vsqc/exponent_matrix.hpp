#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vsqc {

/// Structural classification of an exponent matrix.
///
/// A matrix is vertically symmetric (VS) when its lower half is the
/// entrywise negation of its upper half; odd-height VS matrices carry an
/// all-zero top row in addition. Classification is over the integers, never
/// modulo a circulant size.
enum class StructureTag { general, vs_even, vs_odd };

std::string to_string(StructureTag tag);

/// J x L integer exponent matrix of a quasi-cyclic LDPC code.
///
/// Entry e(i,r) is the cyclic shift of the P x P circulant placed at block
/// (i,r) once a circulant size P is chosen; entries are kept as signed
/// integers and reduced mod P only at lifting / cycle-evaluation time, so
/// VS matrices keep their literal -a rows. Instances are immutable.
class ExponentMatrix {
public:
    ExponentMatrix() = default;
    ExponentMatrix(int rows, int cols, std::vector<std::int64_t> row_major);

    static ExponentMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    StructureTag tag() const { return tag_; }

    std::int64_t operator()(int i, int r) const { return entries_[static_cast<std::size_t>(i) * cols_ + r]; }
    std::span<const std::int64_t> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<const std::int64_t> entries() const { return entries_; }

    bool operator==(const ExponentMatrix& other) const = default;

    /// Entrywise congruence mod P.
    bool congruent(const ExponentMatrix& other, std::int64_t P) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> entries_;
    StructureTag tag_ = StructureTag::general;
};

/// Builds a J x L matrix from explicit entries; the structure tag is
/// recomputed from the data. Throws std::invalid_argument on dimension
/// mismatch.
ExponentMatrix make_matrix(int J, int L, const std::vector<std::vector<std::int64_t>>& entries);

/// Recognizes the VS structure of a matrix (entrywise test over the
/// integers, not mod P).
StructureTag classify_structure(const ExponentMatrix& E);

/// Least nonnegative residue.
inline std::int64_t mod_p(std::int64_t x, std::int64_t P) {
    std::int64_t r = x % P;
    return r < 0 ? r + P : r;
}

/// Blockwise 0/1 pattern selecting which circulants of a lifted code are
/// kept. Used for masking; dimensions must match the exponent matrix.
struct Mask {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // row-major, 0 = masked out

    bool at(int i, int r) const { return bits[static_cast<std::size_t>(i) * cols + r] != 0; }
    static Mask all_ones(int rows, int cols);
};

/// A concrete closed block-path proving a cycle of length 2k at circulant
/// size P: rows m_0..m_{k-1}, cols n_0..n_{k-1} with adjacent entries
/// distinct (cyclically) and alternating shift sum = 0 mod P.
struct CycleWitness {
    int length = 0;  // 2k
    std::vector<int> rows;
    std::vector<int> cols;
    std::int64_t P = 0;
    std::int64_t residue = 0;  // alternating sum mod P, must be 0
};

/// Re-validates a witness against a matrix: adjacency constraints, block
/// presence under the mask, and zero alternating sum mod P.
bool validate_witness(const CycleWitness& w, const ExponentMatrix& E, const Mask* mask = nullptr);

}  // namespace vsqc
