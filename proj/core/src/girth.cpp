#include "vsqc/girth.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace vsqc {

LiftedCode::LiftedCode(const ExponentMatrix& E, std::int64_t P, const Mask* mask)
    : J_(E.rows()), L_(E.cols()), P_(P) {
    if (P < 2) throw std::invalid_argument("lift: P must be >= 2");
    if (mask && (mask->rows != J_ || mask->cols != L_))
        throw std::invalid_argument("lift: mask dimensions do not match matrix");
    shifts_.resize(static_cast<std::size_t>(J_) * L_);
    present_.resize(shifts_.size(), 1);
    for (int i = 0; i < J_; ++i)
        for (int r = 0; r < L_; ++r) {
            const auto idx = static_cast<std::size_t>(i) * L_ + r;
            shifts_[idx] = mod_p(E(i, r), P);
            if (mask && !mask->at(i, r)) present_[idx] = 0;
        }
}

std::int64_t LiftedCode::num_edges() const {
    std::int64_t blocks = 0;
    for (auto p : present_) blocks += p;
    return blocks * P_;
}

LiftedCode lift(const ExponentMatrix& E, std::int64_t P, const Mask* mask) {
    return LiftedCode(E, P, mask);
}

namespace {

// Shared context for the equation-based cycle search on one (E, P, mask).
struct CycleSearch {
    int J, L, k;
    std::int64_t P;
    std::vector<std::int64_t> M;      // entries mod P
    std::vector<std::uint8_t> present;

    std::vector<int> ms;              // current row sequence
    std::vector<std::vector<int>> valid;        // per position t: usable columns
    std::vector<std::vector<std::int64_t>> g;   // per position t: g_t[c], indexed by column

    // Buckets for the meet-in-the-middle existence test: sum value ->
    // packed (first*L + last) endpoints of first-half tuples, deduplicated
    // so each (value, first, last) appears once.
    std::unordered_map<std::int64_t, std::vector<std::int32_t>> buckets;
    std::unordered_set<std::int64_t> bucket_seen;

    CycleSearch(const ExponentMatrix& E, std::int64_t P_, int k_, const Mask* mask)
        : J(E.rows()), L(E.cols()), k(k_), P(P_) {
        M.resize(static_cast<std::size_t>(J) * L);
        present.assign(M.size(), 1);
        for (int i = 0; i < J; ++i)
            for (int r = 0; r < L; ++r) {
                M[static_cast<std::size_t>(i) * L + r] = mod_p(E(i, r), P);
                if (mask && !mask->at(i, r)) present[static_cast<std::size_t>(i) * L + r] = 0;
            }
        ms.resize(k);
        valid.resize(k);
        g.assign(k, std::vector<std::int64_t>(L, 0));
    }

    std::int64_t entry(int i, int c) const { return M[static_cast<std::size_t>(i) * L + c]; }
    bool has(int i, int c) const { return present[static_cast<std::size_t>(i) * L + c] != 0; }

    // Prepares g_t and valid column lists for the current row sequence.
    // Returns false when some position has no usable column.
    bool prepare_row_seq() {
        for (int t = 0; t < k; ++t) {
            const int prev = ms[(t + k - 1) % k];
            const int cur = ms[t];
            valid[t].clear();
            for (int c = 0; c < L; ++c) {
                if (!has(cur, c) || !has(prev, c)) continue;
                valid[t].push_back(c);
                g[t][c] = mod_p(entry(cur, c) - entry(prev, c), P);
            }
            if (valid[t].empty()) return false;
        }
        return true;
    }

    // Meet-in-the-middle existence of a column assignment for the current
    // row sequence: positions [0,h) against [h,k).
    bool column_assignment_exists() {
        const int h = k / 2;
        buckets.clear();
        bucket_seen.clear();
        // First half: enumerate (n_0..n_{h-1}) with internal adjacency.
        std::vector<int> tuple(h);
        enumerate_half(0, h, 0, tuple, [&](std::int64_t sum, int first, int last) {
            const std::int32_t packed = static_cast<std::int32_t>(first * L + last);
            if (bucket_seen.insert(sum * L * L + packed).second) buckets[sum].push_back(packed);
            return false;
        });
        // Second half: query. Compatibility: lastA != firstB, firstA != lastB.
        // With endpoints deduplicated, at most L entries collide on each
        // boundary, so scanning min(bucket, 2L+1) entries is exact.
        bool found = false;
        std::vector<int> tuple2(k - h);
        enumerate_half(h, k, 0, tuple2, [&](std::int64_t sum, int firstB, int lastB) {
            const auto it = buckets.find(mod_p(-sum, P));
            if (it == buckets.end()) return false;
            const auto& vec = it->second;
            const std::size_t limit = std::min<std::size_t>(vec.size(), 2 * L + 1);
            for (std::size_t a = 0; a < limit; ++a) {
                const int first = vec[a] / L, last = vec[a] % L;
                if (last != firstB && first != lastB) {
                    found = true;
                    return true;
                }
            }
            return false;
        });
        return found;
    }

    // Enumerates tuples for positions [from, to) in lexicographic order;
    // visit(sum, first, last) returning true stops the enumeration.
    template <typename Visit>
    bool enumerate_half(int from, int to, std::int64_t sum, std::vector<int>& tuple, Visit&& visit,
                        int depth = 0) {
        const int t = from + depth;
        for (int c : valid[t]) {
            if (depth > 0 && c == tuple[depth - 1]) continue;
            tuple[depth] = c;
            const std::int64_t s = mod_p(sum + g[t][c], P);
            if (t + 1 == to) {
                if (visit(s, tuple[0], c)) return true;
            } else {
                if (enumerate_half(from, to, s, tuple, visit, depth + 1)) return true;
            }
        }
        return false;
    }

    // Lexicographically first column assignment for the current row
    // sequence, assuming one exists. Suffix-sum feasibility bitmaps prune
    // the search.
    std::vector<int> extract_columns() {
        std::vector<std::vector<std::uint8_t>> feasible(k + 1, std::vector<std::uint8_t>(P, 0));
        feasible[k][0] = 1;
        for (int t = k - 1; t >= 0; --t)
            for (int c : valid[t])
                for (std::int64_t v = 0; v < P; ++v)
                    if (feasible[t + 1][v]) feasible[t][mod_p(g[t][c] + v, P)] = 1;

        std::vector<int> cols(k, -1);
        if (!extract_dfs(0, 0, cols, feasible)) throw std::logic_error("cycle extraction failed");
        return cols;
    }

    bool extract_dfs(int t, std::int64_t sum, std::vector<int>& cols,
                     const std::vector<std::vector<std::uint8_t>>& feasible) {
        if (t == k) return sum == 0;
        if (!feasible[t][mod_p(-sum, P)]) return false;
        for (int c : valid[t]) {
            if (t > 0 && c == cols[t - 1]) continue;
            if (t == k - 1 && c == cols[0]) continue;
            cols[t] = c;
            if (extract_dfs(t + 1, mod_p(sum + g[t][c], P), cols, feasible)) return true;
        }
        cols[t] = -1;
        return false;
    }

    // Lexicographic enumeration of row sequences with cyclic adjacency.
    std::optional<CycleWitness> run() {
        return row_dfs(0) ? std::optional<CycleWitness>(make_witness()) : std::nullopt;
    }

    bool row_dfs(int t) {
        for (int m = 0; m < J; ++m) {
            if (t > 0 && m == ms[t - 1]) continue;
            if (t == k - 1 && m == ms[0]) continue;
            ms[t] = m;
            if (t + 1 == k) {
                if (prepare_row_seq() && column_assignment_exists()) return true;
            } else {
                if (row_dfs(t + 1)) return true;
            }
        }
        return false;
    }

    CycleWitness make_witness() {
        CycleWitness w;
        w.length = 2 * k;
        w.rows = ms;
        w.cols = extract_columns();
        w.P = P;
        std::int64_t sum = 0;
        for (int t = 0; t < k; ++t)
            sum += entry(ms[t], w.cols[t]) - entry(ms[t], w.cols[(t + 1) % k]);
        w.residue = mod_p(sum, P);
        return w;
    }
};

}  // namespace

std::optional<CycleWitness> find_cycle(const ExponentMatrix& E, std::int64_t P, int k, const Mask* mask) {
    if (k < 2) throw std::invalid_argument("find_cycle: k must be >= 2");
    if (P < 2) throw std::invalid_argument("find_cycle: P must be >= 2");
    if (mask && (mask->rows != E.rows() || mask->cols != E.cols()))
        throw std::invalid_argument("find_cycle: mask dimensions do not match matrix");
    if (E.rows() < 2) return std::nullopt;
    CycleSearch search(E, P, k, mask);
    return search.run();
}

std::int64_t count_cycles(const ExponentMatrix& E, std::int64_t P, int k, const Mask* mask) {
    if (k != 2 && k != 3) throw std::invalid_argument("count_cycles: only k in {2,3} supported");
    if (P < 2) throw std::invalid_argument("count_cycles: P must be >= 2");
    const int J = E.rows(), L = E.cols();
    auto has = [&](int i, int c) { return !mask || mask->at(i, c); };

    if (k == 2) {
        std::int64_t total = 0;
        std::unordered_map<std::int64_t, std::int64_t> mult;
        for (int i = 0; i < J; ++i)
            for (int j = i + 1; j < J; ++j) {
                mult.clear();
                for (int c = 0; c < L; ++c)
                    if (has(i, c) && has(j, c)) ++mult[mod_p(E(i, c) - E(j, c), P)];
                for (const auto& [v, m] : mult) total += m * (m - 1) / 2;
            }
        return total;
    }

    // k == 3: for each unordered row triple, count ordered column triples in
    // both traversal directions; each geometric 6-cycle appears exactly
    // twice.
    std::int64_t total2 = 0;
    std::unordered_map<std::int64_t, std::int64_t> cnt;
    auto ordered = [&](int a, int b, int c) -> std::int64_t {
        // positions: n0 between rows (c,a), n1 between (a,b), n2 between (b,c)
        std::vector<std::int64_t> A(L), B(L), C(L);
        std::vector<std::uint8_t> vA(L, 0), vB(L, 0), vC(L, 0);
        for (int col = 0; col < L; ++col) {
            if (has(a, col) && has(c, col)) { vA[col] = 1; A[col] = mod_p(E(a, col) - E(c, col), P); }
            if (has(b, col) && has(a, col)) { vB[col] = 1; B[col] = mod_p(E(b, col) - E(a, col), P); }
            if (has(c, col) && has(b, col)) { vC[col] = 1; C[col] = mod_p(E(c, col) - E(b, col), P); }
        }
        cnt.clear();
        for (int col = 0; col < L; ++col)
            if (vC[col]) ++cnt[C[col]];
        std::int64_t n = 0;
        for (int n0 = 0; n0 < L; ++n0) {
            if (!vA[n0]) continue;
            for (int n1 = 0; n1 < L; ++n1) {
                if (!vB[n1] || n1 == n0) continue;
                const std::int64_t need = mod_p(-(A[n0] + B[n1]), P);
                auto it = cnt.find(need);
                if (it == cnt.end()) continue;
                std::int64_t c3 = it->second;
                if (vC[n0] && C[n0] == need) --c3;
                if (vC[n1] && C[n1] == need) --c3;
                n += c3;
            }
        }
        return n;
    };
    for (int i = 0; i < J; ++i)
        for (int j = i + 1; j < J; ++j)
            for (int l = j + 1; l < J; ++l) total2 += ordered(i, j, l) + ordered(i, l, j);
    if (total2 % 2 != 0) throw std::logic_error("count_cycles: direction classes out of balance");
    return total2 / 2;
}

GirthReport girth_from_equations(const ExponentMatrix& E, std::int64_t P, int cap, const Mask* mask) {
    if (cap < 4 || cap % 2 != 0 || cap > 16)
        throw std::invalid_argument("girth: cap must be even and within [4,16]");
    GirthReport report;
    report.cap = cap;
    for (int k = 2; 2 * k <= cap; ++k) {
        if (auto w = find_cycle(E, P, k, mask)) {
            report.girth = 2 * k;
            report.exact = true;
            report.witness = std::move(w);
            return report;
        }
    }
    report.girth = cap + 2;
    report.exact = false;
    return report;
}

namespace {

// CSR adjacency of the lifted Tanner graph. Variables occupy [0, L*P),
// checks [L*P, L*P + J*P).
struct TannerGraph {
    std::int64_t n = 0;
    std::vector<std::int32_t> offsets;
    std::vector<std::int32_t> targets;

    explicit TannerGraph(const LiftedCode& code) {
        const int J = code.block_rows(), L = code.block_cols();
        const std::int64_t P = code.circulant();
        n = (J + L) * P;
        std::vector<std::int32_t> degree(n, 0);
        for (int i = 0; i < J; ++i)
            for (int r = 0; r < L; ++r)
                if (code.present(i, r))
                    for (std::int64_t t = 0; t < P; ++t) {
                        ++degree[L * P + i * P + t];
                        ++degree[r * P + (t + code.shift(i, r)) % P];
                    }
        offsets.assign(n + 1, 0);
        for (std::int64_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
        targets.resize(offsets[n]);
        std::vector<std::int32_t> fill(offsets.begin(), offsets.end() - 1);
        for (int i = 0; i < J; ++i)
            for (int r = 0; r < L; ++r)
                if (code.present(i, r))
                    for (std::int64_t t = 0; t < P; ++t) {
                        const std::int32_t check = static_cast<std::int32_t>(L * P + i * P + t);
                        const std::int32_t var = static_cast<std::int32_t>(r * P + (t + code.shift(i, r)) % P);
                        targets[fill[check]++] = var;
                        targets[fill[var]++] = check;
                    }
    }
};

struct BfsState {
    std::vector<std::int32_t> dist, parent;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<std::int32_t> queue;

    explicit BfsState(std::int64_t n) : dist(n, 0), parent(n, -1), stamp(n, 0) { queue.reserve(n); }

    bool seen(std::int32_t v) const { return stamp[v] == epoch; }
    void visit(std::int32_t v, std::int32_t d, std::int32_t p) {
        stamp[v] = epoch;
        dist[v] = d;
        parent[v] = p;
    }
};

// Truncated BFS from root; returns the best candidate cycle length and its
// closing edge. Candidates dist[u]+dist[w]+1 for non-tree edges never
// undershoot the girth, and the shortest cycle through the root is found
// once depth reaches half the cap.
struct Candidate {
    int length = INT32_MAX;
    std::int32_t u = -1, w = -1;
};

Candidate bfs_root(const TannerGraph& graph, BfsState& state, std::int32_t root, int depth_limit) {
    Candidate best;
    ++state.epoch;
    state.queue.clear();
    state.visit(root, 0, -1);
    state.queue.push_back(root);
    std::size_t head = 0;
    while (head < state.queue.size()) {
        const std::int32_t u = state.queue[head++];
        const std::int32_t du = state.dist[u];
        const bool expand = du < depth_limit;
        for (std::int32_t e = graph.offsets[u]; e < graph.offsets[u + 1]; ++e) {
            const std::int32_t w = graph.targets[e];
            if (!state.seen(w)) {
                if (expand) {
                    state.visit(w, du + 1, u);
                    state.queue.push_back(w);
                }
            } else if (w != state.parent[u]) {
                const int len = du + state.dist[w] + 1;
                if (len < best.length) best = {len, u, w};
            }
        }
    }
    return best;
}

}  // namespace

GirthReport girth_from_graph(const LiftedCode& code, int cap) {
    if (cap < 4 || cap % 2 != 0) throw std::invalid_argument("girth: cap must be even and >= 4");
    const TannerGraph graph(code);
    const std::int64_t P = code.circulant();
    const int L = code.block_cols();
    BfsState state(graph.n);

    GirthReport report;
    report.cap = cap;
    int best_len = cap + 2;
    std::int32_t best_root = -1;
    for (int r = 0; r < L; ++r) {
        const auto cand = bfs_root(graph, state, static_cast<std::int32_t>(r) * P, cap / 2);
        if (cand.length < best_len) {
            best_len = cand.length;
            best_root = static_cast<std::int32_t>(r) * P;
        }
    }
    if (best_len > cap) {
        report.girth = cap + 2;
        report.exact = false;
        return report;
    }
    report.girth = best_len;
    report.exact = true;

    // Rebuild the shortest cycle through best_root for the witness.
    const auto cand = bfs_root(graph, state, best_root, cap / 2);
    std::vector<std::int32_t> path_u, path_w;
    for (std::int32_t v = cand.u; v != -1; v = state.parent[v]) path_u.push_back(v);
    for (std::int32_t v = cand.w; v != -1; v = state.parent[v]) path_w.push_back(v);
    std::reverse(path_u.begin(), path_u.end());
    std::vector<std::int32_t> nodes = path_u;  // root .. u
    nodes.insert(nodes.end(), path_w.begin(), path_w.end() - 1);  // w .. (excl. root)

    // At the global minimum the closed walk is a simple cycle.
    {
        auto sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::logic_error("girth_from_graph: non-simple shortest closed walk");
    }

    // Rotate so the cycle starts at a variable node, then read off blocks.
    const std::int64_t var_count = static_cast<std::int64_t>(L) * P;
    std::size_t start = 0;
    while (nodes[start] >= var_count) ++start;
    CycleWitness w;
    const int k = static_cast<int>(nodes.size()) / 2;
    w.length = 2 * k;
    w.P = P;
    for (int t = 0; t < k; ++t) {
        const std::int32_t vn = nodes[(start + 2 * t) % nodes.size()];
        const std::int32_t cn = nodes[(start + 2 * t + 1) % nodes.size()];
        if (vn >= var_count || cn < var_count)
            throw std::logic_error("girth_from_graph: cycle does not alternate sides");
        w.cols.push_back(static_cast<int>(vn / P));
        w.rows.push_back(static_cast<int>((cn - var_count) / P));
    }
    std::int64_t sum = 0;
    for (int t = 0; t < k; ++t)
        sum += mod_p(code.shift(w.rows[t], w.cols[t]) - code.shift(w.rows[t], w.cols[(t + 1) % k]), P);
    w.residue = mod_p(sum, P);
    report.witness = std::move(w);
    return report;
}

}  // namespace vsqc
