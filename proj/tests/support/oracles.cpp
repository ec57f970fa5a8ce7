#include "oracles.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace testsupport {

using vsqc::mod_p;

namespace {

bool block_ok(const vsqc::ExponentMatrix&, const vsqc::Mask* mask, int i, int r) {
    return !mask || mask->at(i, r);
}

bool cols_dfs(const vsqc::ExponentMatrix& E, std::int64_t P, int k, const vsqc::Mask* mask,
              const std::vector<int>& ms, std::vector<int>& ns, int t) {
    const int L = E.cols();
    if (t == k) {
        std::int64_t sum = 0;
        for (int u = 0; u < k; ++u) {
            const int un = (u + 1) % k;
            if (!block_ok(E, mask, ms[u], ns[u]) || !block_ok(E, mask, ms[u], ns[un])) return false;
            sum += E(ms[u], ns[u]) - E(ms[u], ns[un]);
        }
        return mod_p(sum, P) == 0;
    }
    for (int c = 0; c < L; ++c) {
        if (t > 0 && c == ns[t - 1]) continue;
        if (t == k - 1 && c == ns[0]) continue;
        ns[t] = c;
        if (cols_dfs(E, P, k, mask, ms, ns, t + 1)) return true;
    }
    return false;
}

bool rows_dfs(const vsqc::ExponentMatrix& E, std::int64_t P, int k, const vsqc::Mask* mask,
              std::vector<int>& ms, int t) {
    const int J = E.rows();
    if (t == k) {
        std::vector<int> ns(k);
        return cols_dfs(E, P, k, mask, ms, ns, 0);
    }
    for (int m = 0; m < J; ++m) {
        if (t > 0 && m == ms[t - 1]) continue;
        if (t == k - 1 && m == ms[0]) continue;
        ms[t] = m;
        if (rows_dfs(E, P, k, mask, ms, t + 1)) return true;
    }
    return false;
}

std::int64_t count_dfs_cols(const vsqc::ExponentMatrix& E, std::int64_t P, int k,
                            const vsqc::Mask* mask, const std::vector<int>& ms) {
    // count all column tuples for this row sequence
    const int L = E.cols();
    std::vector<int> ns(k);
    std::int64_t total = 0;
    // plain odometer with adjacency skip
    std::vector<int> idx(k, 0);
    int t = 0;
    while (t >= 0) {
        if (t == k) {
            std::int64_t sum = 0;
            bool ok = true;
            for (int u = 0; u < k && ok; ++u) {
                const int un = (u + 1) % k;
                if (!block_ok(E, mask, ms[u], ns[u]) || !block_ok(E, mask, ms[u], ns[un])) ok = false;
                else sum += E(ms[u], ns[u]) - E(ms[u], ns[un]);
            }
            if (ok && mod_p(sum, P) == 0) ++total;
            --t;
            continue;
        }
        bool advanced = false;
        for (int c = idx[t]; c < L; ++c) {
            if (t > 0 && c == ns[t - 1]) continue;
            if (t == k - 1 && c == ns[0]) continue;
            ns[t] = c;
            idx[t] = c + 1;
            advanced = true;
            break;
        }
        if (!advanced) {
            idx[t] = 0;
            --t;
        } else {
            ++t;
            if (t < k) idx[t] = 0;
        }
    }
    return total;
}

void all_row_seqs(int J, int k, std::vector<int>& ms, int t, std::vector<std::vector<int>>& out) {
    if (t == k) {
        out.push_back(ms);
        return;
    }
    for (int m = 0; m < J; ++m) {
        if (t > 0 && m == ms[t - 1]) continue;
        if (t == k - 1 && m == ms[0]) continue;
        ms[t] = m;
        all_row_seqs(J, k, ms, t + 1, out);
    }
}

}  // namespace

bool brute_has_cycle(const vsqc::ExponentMatrix& E, std::int64_t P, int k, const vsqc::Mask* mask) {
    std::vector<int> ms(k);
    return rows_dfs(E, P, k, mask, ms, 0);
}

int brute_girth(const vsqc::ExponentMatrix& E, std::int64_t P, int cap, const vsqc::Mask* mask) {
    for (int k = 2; 2 * k <= cap; ++k)
        if (brute_has_cycle(E, P, k, mask)) return 2 * k;
    return cap + 2;
}

std::int64_t brute_count_cycles(const vsqc::ExponentMatrix& E, std::int64_t P, int k,
                                const vsqc::Mask* mask) {
    if (k != 2 && k != 3) throw std::invalid_argument("brute_count_cycles: k in {2,3} only");
    std::vector<int> ms(k);
    std::vector<std::vector<int>> seqs;
    all_row_seqs(E.rows(), k, ms, 0, seqs);
    std::int64_t tuples = 0;
    for (const auto& seq : seqs) tuples += count_dfs_cols(E, P, k, mask, seq);
    if (tuples % (2 * k) != 0) throw std::logic_error("brute_count_cycles: orbit size mismatch");
    return tuples / (2 * k);
}

std::vector<std::int64_t> greedy_sidon(std::int64_t P, int count) {
    std::vector<std::int64_t> seq;
    std::set<std::int64_t> sums;
    for (std::int64_t x = 0; x < P && static_cast<int>(seq.size()) < count; ++x) {
        std::vector<std::int64_t> add;
        bool ok = true;
        for (auto s : seq) {
            const auto v = mod_p(s + x, P);
            if (sums.count(v)) { ok = false; break; }
            add.push_back(v);
        }
        const auto self = mod_p(2 * x, P);
        if (ok && !sums.count(self)) {
            std::unordered_set<std::int64_t> fresh(add.begin(), add.end());
            if (fresh.size() == add.size() && !fresh.count(self)) {
                seq.push_back(x);
                for (auto v : add) sums.insert(v);
                sums.insert(self);
            }
        }
    }
    return seq;
}

vsqc::ExponentMatrix random_matrix(std::mt19937_64& rng, int J, int L, std::int64_t span) {
    std::uniform_int_distribution<std::int64_t> dist(-span, span);
    std::vector<std::vector<std::int64_t>> rows(J, std::vector<std::int64_t>(L));
    for (auto& row : rows)
        for (auto& e : row) e = dist(rng);
    return vsqc::ExponentMatrix::from_rows(rows);
}

vsqc::Mask random_mask(std::mt19937_64& rng, int J, int L, double keep_probability) {
    std::bernoulli_distribution keep(keep_probability);
    for (;;) {
        vsqc::Mask mask{J, L, std::vector<std::uint8_t>(static_cast<std::size_t>(J) * L, 0)};
        for (auto& b : mask.bits) b = keep(rng) ? 1 : 0;
        bool ok = true;
        for (int i = 0; i < J && ok; ++i) {
            bool any = false;
            for (int r = 0; r < L; ++r) any = any || mask.at(i, r);
            ok = any;
        }
        for (int r = 0; r < L && ok; ++r) {
            bool any = false;
            for (int i = 0; i < J; ++i) any = any || mask.at(i, r);
            ok = any;
        }
        if (ok) return mask;
    }
}

ParsedAlist parse_alist(const std::string& text) {
    std::istringstream in(text);
    ParsedAlist out;
    std::int64_t max_col = 0, max_row = 0;
    if (!(in >> out.n >> out.m >> max_col >> max_row)) throw std::invalid_argument("alist: bad header");
    std::vector<std::int64_t> col_deg(out.n), row_deg(out.m);
    for (auto& d : col_deg) in >> d;
    for (auto& d : row_deg) in >> d;
    out.col_neighbors.resize(out.n);
    for (std::int64_t v = 0; v < out.n; ++v) {
        out.col_neighbors[v].resize(col_deg[v]);
        for (auto& x : out.col_neighbors[v]) in >> x;
    }
    out.row_neighbors.resize(out.m);
    for (std::int64_t c = 0; c < out.m; ++c) {
        out.row_neighbors[c].resize(row_deg[c]);
        for (auto& x : out.row_neighbors[c]) in >> x;
    }
    if (!in) throw std::invalid_argument("alist: truncated");
    return out;
}

}  // namespace testsupport
