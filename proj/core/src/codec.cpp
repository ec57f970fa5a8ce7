#include "vsqc/codec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vsqc/parallel.hpp"

namespace vsqc {

namespace {

constexpr double kLlrClip = 30.0;

void tanner_degrees(const LiftedCode& code, std::vector<std::int32_t>& col_deg,
                    std::vector<std::int32_t>& row_deg) {
    const int J = code.block_rows(), L = code.block_cols();
    const std::int64_t P = code.circulant();
    col_deg.assign(L * P, 0);
    row_deg.assign(J * P, 0);
    for (int i = 0; i < J; ++i)
        for (int r = 0; r < L; ++r)
            if (code.present(i, r))
                for (std::int64_t t = 0; t < P; ++t) {
                    ++row_deg[i * P + t];
                    ++col_deg[r * P + (t + code.shift(i, r)) % P];
                }
}

}  // namespace

std::string to_alist(const LiftedCode& code) {
    const int J = code.block_rows(), L = code.block_cols();
    const std::int64_t P = code.circulant();
    const std::int64_t N = L * P, M = J * P;

    std::vector<std::int32_t> col_deg, row_deg;
    tanner_degrees(code, col_deg, row_deg);
    for (std::int64_t v = 0; v < N; ++v)
        if (col_deg[v] == 0) throw std::invalid_argument("to_alist: zero-degree column");
    for (std::int64_t c = 0; c < M; ++c)
        if (row_deg[c] == 0) throw std::invalid_argument("to_alist: zero-degree row");

    std::vector<std::vector<std::int64_t>> col_list(N), row_list(M);
    for (std::int64_t v = 0; v < N; ++v) col_list[v].reserve(col_deg[v]);
    for (std::int64_t c = 0; c < M; ++c) row_list[c].reserve(row_deg[c]);
    for (int i = 0; i < J; ++i)
        for (int r = 0; r < L; ++r)
            if (code.present(i, r))
                for (std::int64_t t = 0; t < P; ++t) {
                    const std::int64_t check = i * P + t;
                    const std::int64_t var = r * P + (t + code.shift(i, r)) % P;
                    col_list[var].push_back(check + 1);
                    row_list[check].push_back(var + 1);
                }
    for (auto& l : col_list) std::sort(l.begin(), l.end());
    for (auto& l : row_list) std::sort(l.begin(), l.end());

    std::ostringstream os;
    os << N << " " << M << "\n";
    os << *std::max_element(col_deg.begin(), col_deg.end()) << " "
       << *std::max_element(row_deg.begin(), row_deg.end()) << "\n";
    for (std::int64_t v = 0; v < N; ++v) os << col_deg[v] << (v + 1 == N ? "\n" : " ");
    for (std::int64_t c = 0; c < M; ++c) os << row_deg[c] << (c + 1 == M ? "\n" : " ");
    for (const auto& l : col_list) {
        for (std::size_t i = 0; i < l.size(); ++i) os << l[i] << (i + 1 == l.size() ? "" : " ");
        os << "\n";
    }
    for (const auto& l : row_list) {
        for (std::size_t i = 0; i < l.size(); ++i) os << l[i] << (i + 1 == l.size() ? "" : " ");
        os << "\n";
    }
    return os.str();
}

MaskedMatrix apply_mask(const ExponentMatrix& E, Mask mask) {
    if (mask.rows != E.rows() || mask.cols != E.cols())
        throw std::invalid_argument("apply_mask: mask dimensions do not match matrix");
    for (int i = 0; i < mask.rows; ++i) {
        bool any = false;
        for (int r = 0; r < mask.cols; ++r) any = any || mask.at(i, r);
        if (!any) throw std::invalid_argument("apply_mask: all-zero mask row");
    }
    for (int r = 0; r < mask.cols; ++r) {
        bool any = false;
        for (int i = 0; i < mask.rows; ++i) any = any || mask.at(i, r);
        if (!any) throw std::invalid_argument("apply_mask: all-zero mask column");
    }
    return MaskedMatrix{E, std::move(mask)};
}

SpaDecoder::SpaDecoder(const LiftedCode& code) {
    const int J = code.block_rows(), L = code.block_cols();
    const std::int64_t P = code.circulant();
    n_vars_ = L * P;
    n_checks_ = J * P;

    std::vector<std::int32_t> col_deg, row_deg;
    tanner_degrees(code, col_deg, row_deg);
    check_offsets_.assign(n_checks_ + 1, 0);
    var_offsets_.assign(n_vars_ + 1, 0);
    for (std::int64_t c = 0; c < n_checks_; ++c) check_offsets_[c + 1] = check_offsets_[c] + row_deg[c];
    for (std::int64_t v = 0; v < n_vars_; ++v) var_offsets_[v + 1] = var_offsets_[v] + col_deg[v];
    const std::int64_t edges = check_offsets_[n_checks_];
    check_edges_.resize(edges);
    var_edges_.resize(edges);
    edge_var_.resize(edges);

    // Edge ids are assigned in check order so check adjacency is contiguous.
    std::vector<std::int32_t> cfill(check_offsets_.begin(), check_offsets_.end() - 1);
    for (int i = 0; i < J; ++i)
        for (int r = 0; r < L; ++r)
            if (code.present(i, r))
                for (std::int64_t t = 0; t < P; ++t) {
                    const std::int64_t check = i * P + t;
                    const std::int64_t var = r * P + (t + code.shift(i, r)) % P;
                    const std::int32_t e = cfill[check]++;
                    check_edges_[e] = e;
                    edge_var_[e] = static_cast<std::int32_t>(var);
                }
    std::vector<std::int32_t> vfill(var_offsets_.begin(), var_offsets_.end() - 1);
    for (std::int64_t e = 0; e < edges; ++e) var_edges_[vfill[edge_var_[e]]++] = static_cast<std::int32_t>(e);

    v2c_.resize(edges);
    c2v_.resize(edges);
    totals_.resize(n_vars_);
    hard_.resize(n_vars_);
}

bool SpaDecoder::syndrome_zero(std::span<const std::uint8_t> bits) const {
    for (std::int64_t c = 0; c < n_checks_; ++c) {
        int parity = 0;
        for (std::int32_t e = check_offsets_[c]; e < check_offsets_[c + 1]; ++e)
            parity ^= bits[edge_var_[e]];
        if (parity) return false;
    }
    return true;
}

DecodeResult SpaDecoder::decode(std::span<const double> llr, int max_iters) {
    if (static_cast<std::int64_t>(llr.size()) != n_vars_)
        throw std::invalid_argument("spa_decode: llr length does not match code length");
    if (max_iters < 1) throw std::invalid_argument("spa_decode: max_iters must be >= 1");

    const std::int64_t edges = static_cast<std::int64_t>(edge_var_.size());
    for (std::int64_t e = 0; e < edges; ++e) v2c_[e] = llr[edge_var_[e]];

    DecodeResult result;
    std::vector<double> fwd, bwd;
    for (int iter = 1; iter <= max_iters; ++iter) {
        // check-node update: extrinsic tanh products, forward/backward
        for (std::int64_t c = 0; c < n_checks_; ++c) {
            const std::int32_t begin = check_offsets_[c], end = check_offsets_[c + 1];
            const int deg = end - begin;
            fwd.assign(deg, 0.0);
            bwd.assign(deg, 0.0);
            for (int d = 0; d < deg; ++d) {
                const double t = std::tanh(0.5 * v2c_[begin + d]);
                fwd[d] = (d == 0) ? t : fwd[d - 1] * t;
            }
            for (int d = deg - 1; d >= 0; --d) {
                const double t = std::tanh(0.5 * v2c_[begin + d]);
                bwd[d] = (d == deg - 1) ? t : bwd[d + 1] * t;
            }
            for (int d = 0; d < deg; ++d) {
                double prod = 1.0;
                if (d > 0) prod *= fwd[d - 1];
                if (d + 1 < deg) prod *= bwd[d + 1];
                prod = std::clamp(prod, -1.0 + 1e-15, 1.0 - 1e-15);
                const double m = 2.0 * std::atanh(prod);
                c2v_[begin + d] = std::clamp(m, -kLlrClip, kLlrClip);
            }
        }
        // variable-node update and hard decision (ties decide to 0 but do
        // not count as decided bits)
        bool all_decided = true;
        for (std::int64_t v = 0; v < n_vars_; ++v) {
            double total = llr[v];
            for (std::int32_t k = var_offsets_[v]; k < var_offsets_[v + 1]; ++k) total += c2v_[var_edges_[k]];
            totals_[v] = total;
            hard_[v] = total < 0.0 ? 1 : 0;
            if (total == 0.0) all_decided = false;
        }
        for (std::int64_t v = 0; v < n_vars_; ++v)
            for (std::int32_t k = var_offsets_[v]; k < var_offsets_[v + 1]; ++k) {
                const std::int32_t e = var_edges_[k];
                v2c_[e] = totals_[v] - c2v_[e];
            }
        result.iterations = iter;
        if (all_decided && syndrome_zero(hard_)) {
            result.converged = true;
            break;
        }
    }
    result.bits.assign(hard_.begin(), hard_.end());
    return result;
}

DecodeResult spa_decode(std::span<const double> llr, const LiftedCode& code, int max_iters) {
    SpaDecoder decoder(code);
    return decoder.decode(llr, max_iters);
}

std::int64_t gf2_rank(const LiftedCode& code) {
    const int J = code.block_rows(), L = code.block_cols();
    const std::int64_t P = code.circulant();
    const std::int64_t n = L * P, m = J * P;
    const std::int64_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(m * words, 0);
    for (int i = 0; i < J; ++i)
        for (int r = 0; r < L; ++r)
            if (code.present(i, r))
                for (std::int64_t t = 0; t < P; ++t) {
                    const std::int64_t check = i * P + t;
                    const std::int64_t var = r * P + (t + code.shift(i, r)) % P;
                    rows[check * words + var / 64] ^= 1ULL << (var % 64);
                }
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < n && rank < m; ++col) {
        const std::int64_t w = col / 64;
        const std::uint64_t bit = 1ULL << (col % 64);
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < m; ++r)
            if (rows[r * words + w] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (std::int64_t k = 0; k < words; ++k)
                std::swap(rows[pivot * words + k], rows[rank * words + k]);
        for (std::int64_t r = 0; r < m; ++r)
            if (r != rank && (rows[r * words + w] & bit))
                for (std::int64_t k = w; k < words; ++k) rows[r * words + k] ^= rows[rank * words + k];
        ++rank;
    }
    return rank;
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based per-frame noise stream: state derived from (seed, frame),
// Gaussian pairs via Box-Muller so output is platform-independent.
struct NoiseStream {
    std::uint64_t state;
    bool have_spare = false;
    double spare = 0;

    NoiseStream(std::uint64_t seed, std::uint64_t frame) : state(mix64(seed) ^ mix64(frame + 0x51ED2701)) {}

    std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double next_unit() {  // in [0,1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    double next_gaussian() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = 1.0 - next_unit();  // (0,1]
        const double u2 = next_unit();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare = mag * std::sin(2.0 * M_PI * u2);
        have_spare = true;
        return mag * std::cos(2.0 * M_PI * u2);
    }
};

struct FrameResult {
    std::int32_t bit_errors = 0;
    std::int32_t iterations = 0;
    std::uint8_t block_error = 0;
};

constexpr std::int64_t kRoundFrames = 64;  // early-stop granularity, fixed for determinism

}  // namespace

SimStats simulate(const SimConfig& cfg) {
    if (!cfg.code) throw std::invalid_argument("simulate: no code");
    if (cfg.max_iterations < 1 || cfg.max_frames < 1)
        throw std::invalid_argument("simulate: iterations and frames must be >= 1");
    const LiftedCode& code = *cfg.code;
    const std::int64_t n = code.num_vars();

    bool masked = false;
    for (int i = 0; i < code.block_rows() && !masked; ++i)
        for (int r = 0; r < code.block_cols(); ++r)
            if (!code.present(i, r)) {
                masked = true;
                break;
            }
    const double redundancy = masked ? static_cast<double>(gf2_rank(code))
                                     : static_cast<double>(code.num_checks());
    const double rate = (static_cast<double>(n) - redundancy) / static_cast<double>(n);
    if (rate <= 0.0 || rate >= 1.0) throw std::invalid_argument("simulate: code rate outside (0,1)");

    SimStats stats;
    stats.rate = rate;

    int jobs = cfg.jobs > 0 ? cfg.jobs : hardware_jobs();
    std::vector<SpaDecoder> decoders;
    decoders.reserve(jobs);
    for (int t = 0; t < jobs; ++t) decoders.emplace_back(code);

    for (double snr_db : cfg.snr_db_points) {
        const double ebn0 = std::pow(10.0, snr_db / 10.0);
        const double sigma2 = 1.0 / (2.0 * rate * ebn0);
        const double sigma = std::sqrt(sigma2);

        SimPointStats point;
        point.snr_db = snr_db;
        std::int64_t iter_sum = 0;

        std::vector<FrameResult> round(kRoundFrames);
        std::int64_t frame = 0;
        while (frame < cfg.max_frames) {
            const std::int64_t count = std::min(kRoundFrames, cfg.max_frames - frame);
            std::atomic<std::int64_t> next{0};
            auto worker = [&](int slot) {
                SpaDecoder& decoder = decoders[slot];
                std::vector<double> llr(n);
                for (;;) {
                    const std::int64_t i = next.fetch_add(1);
                    if (i >= count) return;
                    NoiseStream noise(cfg.rng_seed, static_cast<std::uint64_t>(frame + i));
                    for (std::int64_t v = 0; v < n; ++v)
                        llr[v] = 2.0 * (1.0 + sigma * noise.next_gaussian()) / sigma2;
                    const auto res = decoder.decode(llr, cfg.max_iterations);
                    FrameResult fr;
                    fr.iterations = res.iterations;
                    for (std::int64_t v = 0; v < n; ++v) fr.bit_errors += res.bits[v];
                    fr.block_error = fr.bit_errors > 0 ? 1 : 0;
                    round[i] = fr;
                }
            };
            if (jobs == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
                for (auto& th : pool) th.join();
            }
            for (std::int64_t i = 0; i < count; ++i) {
                point.bit_errors += round[i].bit_errors;
                point.block_errors += round[i].block_error;
                iter_sum += round[i].iterations;
            }
            frame += count;
            if (cfg.target_errors > 0 && point.block_errors >= cfg.target_errors) break;
        }
        point.frames = frame;
        point.ber = static_cast<double>(point.bit_errors) / (static_cast<double>(frame) * n);
        point.bler = static_cast<double>(point.block_errors) / static_cast<double>(frame);
        point.avg_iterations = static_cast<double>(iter_sum) / static_cast<double>(frame);
        stats.points.push_back(point);
    }
    return stats;
}

}  // namespace vsqc
