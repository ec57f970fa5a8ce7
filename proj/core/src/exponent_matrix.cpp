#include "vsqc/exponent_matrix.hpp"

#include <stdexcept>

namespace vsqc {

std::string to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::general: return "general";
        case StructureTag::vs_even: return "vs_even";
        case StructureTag::vs_odd: return "vs_odd";
    }
    return "general";
}

ExponentMatrix::ExponentMatrix(int rows, int cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
    if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("exponent matrix: dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw std::invalid_argument("exponent matrix: entry count does not match dimensions");
    tag_ = classify_structure(*this);
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("exponent matrix: empty rows");
    const auto cols = rows[0].size();
    std::vector<std::int64_t> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("exponent matrix: ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return ExponentMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(flat));
}

bool ExponentMatrix::congruent(const ExponentMatrix& other, std::int64_t P) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (P < 1) throw std::invalid_argument("congruent: P must be positive");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (mod_p(entries_[i] - other.entries_[i], P) != 0) return false;
    return true;
}

ExponentMatrix make_matrix(int J, int L, const std::vector<std::vector<std::int64_t>>& entries) {
    if (static_cast<int>(entries.size()) != J)
        throw std::invalid_argument("make_matrix: row count does not match J");
    for (const auto& r : entries)
        if (static_cast<int>(r.size()) != L) throw std::invalid_argument("make_matrix: column count does not match L");
    return ExponentMatrix::from_rows(entries);
}

StructureTag classify_structure(const ExponentMatrix& E) {
    const int J = E.rows();
    const int L = E.cols();
    if (J >= 2 && J % 2 == 0) {
        const int half = J / 2;
        bool ok = true;
        for (int i = 0; ok && i < half; ++i)
            for (int r = 0; r < L; ++r)
                if (E(half + i, r) != -E(i, r)) {
                    ok = false;
                    break;
                }
        if (ok) return StructureTag::vs_even;
    }
    if (J % 2 == 1) {
        const int half = (J - 1) / 2;
        bool ok = true;
        for (int r = 0; ok && r < L; ++r)
            if (E(0, r) != 0) ok = false;
        for (int i = 1; ok && i <= half; ++i)
            for (int r = 0; r < L; ++r)
                if (E(half + i, r) != -E(i, r)) {
                    ok = false;
                    break;
                }
        if (ok) return StructureTag::vs_odd;
    }
    return StructureTag::general;
}

Mask Mask::all_ones(int rows, int cols) {
    return Mask{rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 1)};
}

bool validate_witness(const CycleWitness& w, const ExponentMatrix& E, const Mask* mask) {
    const int k = static_cast<int>(w.rows.size());
    if (k < 2 || w.length != 2 * k || static_cast<int>(w.cols.size()) != k) return false;
    if (w.P < 2) return false;
    std::int64_t sum = 0;
    for (int t = 0; t < k; ++t) {
        const int tn = (t + 1) % k;
        if (w.rows[t] == w.rows[tn] || w.cols[t] == w.cols[tn]) return false;
        if (w.rows[t] < 0 || w.rows[t] >= E.rows() || w.cols[t] < 0 || w.cols[t] >= E.cols()) return false;
        if (mask && (!mask->at(w.rows[t], w.cols[t]) || !mask->at(w.rows[t], w.cols[tn]))) return false;
        sum += mod_p(E(w.rows[t], w.cols[t]) - E(w.rows[t], w.cols[tn]), w.P);
    }
    return mod_p(sum, w.P) == 0 && w.residue == 0;
}

}  // namespace vsqc
