#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsqc/exponent_matrix.hpp"
#include "vsqc/girth.hpp"

namespace vsqc {

/// Standard alist text for a lifted code: "N M", max column/row degree,
/// degree lists, then 1-based neighbor index lists (columns first), each on
/// its own line, newline-terminated. Masked blocks are omitted; throws on a
/// zero-degree column or row.
std::string to_alist(const LiftedCode& code);

struct MaskedMatrix {
    ExponentMatrix matrix;
    Mask mask;
};

/// Pairs a matrix with a masking pattern after validating dimensions and
/// that no mask row or column is all-zero. Entries under zeros stay in the
/// matrix but are inert when lifted.
MaskedMatrix apply_mask(const ExponentMatrix& E, Mask mask);

struct DecodeResult {
    std::vector<std::uint8_t> bits;
    bool converged = false;
    int iterations = 0;
};

/// Flooding log-domain sum-product decoder over a lifted code. Check
/// messages are magnitude-clipped at 30; an LLR of exactly 0 hard-decides
/// to bit 0. Stops as soon as every posterior is nonzero and the hard
/// decision satisfies every check; undecided (all-tie) frames run to the
/// iteration cap and report converged = false.
class SpaDecoder {
public:
    explicit SpaDecoder(const LiftedCode& code);

    DecodeResult decode(std::span<const double> llr, int max_iters);

    std::int64_t block_length() const { return n_vars_; }
    std::int64_t num_checks() const { return n_checks_; }

    /// H * bits over GF(2) == 0.
    bool syndrome_zero(std::span<const std::uint8_t> bits) const;

private:
    std::int64_t n_vars_ = 0, n_checks_ = 0;
    std::vector<std::int32_t> check_offsets_, check_edges_;  // CSR over checks
    std::vector<std::int32_t> var_offsets_, var_edges_;      // CSR over vars
    std::vector<std::int32_t> edge_var_;
    std::vector<double> v2c_, c2v_, totals_;
    std::vector<std::uint8_t> hard_;
};

DecodeResult spa_decode(std::span<const double> llr, const LiftedCode& code, int max_iters);

/// Rank of the lifted parity-check matrix over GF(2).
std::int64_t gf2_rank(const LiftedCode& code);

struct SimConfig {
    const LiftedCode* code = nullptr;
    std::vector<double> snr_db_points;  // Eb/N0 in dB
    int max_iterations = 50;
    std::int64_t max_frames = 10000;
    std::int64_t target_errors = 0;  // 0 = run out the frame budget
    std::uint64_t rng_seed = 1;
    int jobs = 0;
};

struct SimPointStats {
    double snr_db = 0;
    std::int64_t frames = 0;
    std::int64_t bit_errors = 0;
    std::int64_t block_errors = 0;
    double ber = 0;
    double bler = 0;
    double avg_iterations = 0;
};

struct SimStats {
    double rate = 0;  // code rate used for noise scaling
    std::vector<SimPointStats> points;
};

/// All-zero-codeword BPSK/AWGN Monte Carlo: bit 0 maps to +1, the noise
/// variance comes from Eb/N0 and the code rate (design rate for unmasked
/// codes, rank-based otherwise), and each frame draws its noise from a
/// counter-based stream keyed by (seed, frame index), so results do not
/// depend on the worker count. Early stop on target_errors block errors is
/// evaluated on fixed-size frame rounds.
SimStats simulate(const SimConfig& cfg);

}  // namespace vsqc
