#include "vsqc/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "vsqc/parallel.hpp"

namespace vsqc {

namespace {

void validate_family(std::span<const std::int64_t> alphas, int J, int L, std::int64_t P) {
    if (J < 3) throw std::invalid_argument("geometric family: J must be >= 3");
    if (L < 2) throw std::invalid_argument("geometric family: L must be >= 2");
    if (P < 2) throw std::invalid_argument("geometric family: P must be >= 2");
    if (static_cast<int>(alphas.size()) != upper_row_count(J))
        throw std::invalid_argument("geometric family: alphas must have floor((J-2)/2)+1 entries");
}

std::vector<std::int64_t> beta_powers(std::int64_t beta, int L, std::int64_t P) {
    std::vector<std::int64_t> bp(L);
    bp[0] = mod_p(1, P);
    for (int r = 1; r < L; ++r) bp[r] = mod_p(bp[r - 1] * mod_p(beta, P), P);
    return bp;
}

// Coefficients c with a 4-cycle family c * (beta^r - beta^s); family (3)
// applies only when the all-zero row is present (odd J).
std::vector<std::int64_t> fourcycle_coefficients(std::span<const std::int64_t> alphas, int J) {
    const int J0 = static_cast<int>(alphas.size()) - 1;
    std::vector<std::int64_t> cs;
    for (int i = 0; i <= J0; ++i)
        for (int j = i + 1; j <= J0; ++j) cs.push_back(alphas[i] - alphas[j]);
    for (int i = 0; i <= J0; ++i)
        for (int j = i; j <= J0; ++j) cs.push_back(alphas[i] + alphas[j]);
    if (J % 2 == 1)
        for (int i = 0; i <= J0; ++i) cs.push_back(alphas[i]);
    return cs;
}

bool pair_collision(std::int64_t c, std::span<const std::int64_t> bp, std::int64_t P) {
    for (std::size_t r = 0; r < bp.size(); ++r)
        for (std::size_t s = r + 1; s < bp.size(); ++s)
            if (mod_p(c * (bp[r] - bp[s]), P) == 0) return true;
    return false;
}

// One 6-cycle coefficient family instance c1*b^s + c2*b^r + c3*b^t with
// r, s, t pairwise distinct. Sorted (value, t) pairs over c3*b^t make the
// inner test a binary search.
bool triple_solution(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                     std::span<const std::int64_t> bp, std::int64_t P,
                     std::vector<std::pair<std::int64_t, int>>& scratch) {
    const int L = static_cast<int>(bp.size());
    scratch.clear();
    for (int t = 0; t < L; ++t) scratch.emplace_back(mod_p(c3 * bp[t], P), t);
    std::sort(scratch.begin(), scratch.end());
    for (int s = 0; s < L; ++s) {
        const std::int64_t v1 = mod_p(c1 * bp[s], P);
        for (int r = 0; r < L; ++r) {
            if (r == s) continue;
            const std::int64_t need = mod_p(-(v1 + c2 * bp[r]), P);
            auto it = std::lower_bound(scratch.begin(), scratch.end(), std::make_pair(need, -1));
            for (; it != scratch.end() && it->first == need; ++it)
                if (it->second != r && it->second != s) return true;
        }
    }
    return false;
}

}  // namespace

ExponentMatrix vs_complete(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                           std::int64_t P) {
    validate_family(alphas, J, L, P);
    const auto bp = beta_powers(beta, L, P);
    std::vector<std::vector<std::int64_t>> rows;
    if (J % 2 == 1) rows.emplace_back(L, 0);
    for (auto a : alphas) {
        std::vector<std::int64_t> row(L);
        for (int r = 0; r < L; ++r) row[r] = mod_p(a * bp[r], P);
        rows.push_back(std::move(row));
    }
    const std::size_t upper = alphas.size();
    const std::size_t upper_base = (J % 2 == 1) ? 1 : 0;
    for (std::size_t i = 0; i < upper; ++i) {
        std::vector<std::int64_t> row(L);
        for (int r = 0; r < L; ++r) row[r] = -rows[upper_base + i][r];
        rows.push_back(std::move(row));
    }
    return ExponentMatrix::from_rows(rows);
}

bool fourcycle_free(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                    std::int64_t P) {
    validate_family(alphas, J, L, P);
    const auto bp = beta_powers(beta, L, P);
    for (auto c : fourcycle_coefficients(alphas, J))
        if (pair_collision(c, bp, P)) return false;
    return true;
}

bool sixcycle_free(std::span<const std::int64_t> alphas, std::int64_t beta, int J, int L,
                   std::int64_t P) {
    validate_family(alphas, J, L, P);
    const auto bp = beta_powers(beta, L, P);
    const int J0 = static_cast<int>(alphas.size()) - 1;
    std::vector<std::pair<std::int64_t, int>> scratch;
    scratch.reserve(L);

    // (1) three rows in the upper (or lower) part
    for (int i = 0; i <= J0; ++i)
        for (int j = i + 1; j <= J0; ++j)
            for (int k = j + 1; k <= J0; ++k)
                if (triple_solution(alphas[i] - alphas[j], alphas[j] - alphas[k], alphas[k] - alphas[i],
                                    bp, P, scratch))
                    return false;
    // (2a) two upper rows, one lower
    for (int i = 0; i <= J0; ++i)
        for (int j = i + 1; j <= J0; ++j)
            for (int k = 0; k <= J0; ++k)
                if (triple_solution(alphas[i] - alphas[j], alphas[j] + alphas[k], -(alphas[k] + alphas[i]),
                                    bp, P, scratch))
                    return false;
    // (2b) one upper row, two lower
    for (int i = 0; i <= J0; ++i)
        for (int j = 0; j <= J0; ++j)
            for (int k = j + 1; k <= J0; ++k)
                if (triple_solution(alphas[i] + alphas[j], alphas[k] - alphas[j], -(alphas[k] + alphas[i]),
                                    bp, P, scratch))
                    return false;
    if (J % 2 == 1) {
        // (3a) zero row with two rows of one part:
        // alpha_i (b^r - b^s) + alpha_j (b^t - b^r)
        for (int i = 0; i <= J0; ++i)
            for (int j = i + 1; j <= J0; ++j)
                if (triple_solution(-alphas[i], alphas[i] - alphas[j], alphas[j], bp, P, scratch))
                    return false;
        // (3b) zero row, one upper, one lower:
        // alpha_i (b^r - b^s) - alpha_j (b^t - b^r)
        for (int i = 0; i <= J0; ++i)
            for (int j = 0; j <= J0; ++j)
                if (triple_solution(-alphas[i], alphas[i] + alphas[j], -alphas[j], bp, P, scratch))
                    return false;
    }
    return true;
}

namespace {

// Exact 4-cycle prescreen for one beta at one P: c*(b^r - b^s) == 0 mod P
// for some r<s iff c == 0 mod P/gcd(b^r - b^s, P) for some pair, so the
// deduplicated moduli set decides every coefficient in O(|G|).
struct BetaScreen {
    bool usable = false;              // false when two beta powers collide
    std::vector<std::int64_t> moduli; // P / gcd(d, P) over distinct pair gaps
    std::vector<std::int64_t> bp;
};

BetaScreen make_screen(std::int64_t beta, int L, std::int64_t P) {
    BetaScreen s;
    s.bp = beta_powers(beta, L, P);
    for (int r = 0; r < L; ++r)
        for (int t = r + 1; t < L; ++t) {
            const std::int64_t d = mod_p(s.bp[r] - s.bp[t], P);
            if (d == 0) return s;  // duplicate powers: every tuple has 4-cycles
            s.moduli.push_back(P / std::gcd(d, P));
        }
    std::sort(s.moduli.begin(), s.moduli.end());
    s.moduli.erase(std::unique(s.moduli.begin(), s.moduli.end()), s.moduli.end());
    s.usable = true;
    return s;
}

bool screen_fourcycle_free(const BetaScreen& s, std::span<const std::int64_t> coeffs) {
    for (auto g : s.moduli)
        for (auto c : coeffs)
            if (c % g == 0) return false;
    return true;
}

struct PerPResult {
    std::optional<SearchHit> first;
    std::vector<SearchHit> all;
    std::uint64_t tuples = 0;
};

// Lexicographic scan of (alpha_1..alpha_J0, beta) at a fixed P.
PerPResult scan_p(const SearchSpec& spec, std::int64_t P) {
    PerPResult out;
    const int J0 = upper_row_count(spec.J) - 1;
    const std::int64_t alo = spec.alpha_lo > 0 ? spec.alpha_lo : 2;
    const std::int64_t ahi = std::min<std::int64_t>(spec.alpha_hi > 0 ? spec.alpha_hi : P - 1, P - 1);
    const std::int64_t blo = spec.beta_lo > 0 ? spec.beta_lo : 2;
    const std::int64_t bhi = std::min<std::int64_t>(spec.beta_hi > 0 ? spec.beta_hi : P - 1, P - 1);
    if (J0 > 0 && alo > ahi) return out;
    if (blo > bhi) return out;

    std::vector<BetaScreen> screens(bhi - blo + 1);
    for (std::int64_t b = blo; b <= bhi; ++b) screens[b - blo] = make_screen(b, spec.L, P);

    std::vector<std::int64_t> alphas(J0 + 1, 1);
    std::vector<std::int64_t> coeffs;
    // odometer over alpha_1..alpha_J0
    for (;;) {
        coeffs = fourcycle_coefficients(alphas, spec.J);
        for (std::int64_t b = blo; b <= bhi; ++b) {
            ++out.tuples;
            const auto& screen = screens[b - blo];
            if (!screen.usable || !screen_fourcycle_free(screen, coeffs)) continue;
            if (!sixcycle_free(alphas, b, spec.J, spec.L, P)) continue;
            if (!fourcycle_free(alphas, b, spec.J, spec.L, P)) continue;  // prescreen insurance
            auto matrix = vs_complete(alphas, b, spec.J, spec.L, P);
            if (!girth_from_graph(matrix, P, 8).is(8)) continue;
            SearchHit hit{P, alphas, b, std::move(matrix)};
            if (!out.first) out.first = hit;
            if (!spec.exhaustive_per_p) return out;
            out.all.push_back(std::move(hit));
        }
        int pos = J0;
        for (; pos >= 1; --pos) {
            if (++alphas[pos] <= ahi) break;
            alphas[pos] = alo;
        }
        if (pos < 1) break;
    }
    return out;
}

}  // namespace

SearchOutcome search_min_p(const SearchSpec& spec) {
    if (spec.J < 4 || spec.J > 7) throw std::invalid_argument("search: J must be in 4..7");
    if (spec.L < 2) throw std::invalid_argument("search: L must be >= 2");
    if (spec.p_hi < spec.p_lo || spec.p_lo < 2) throw std::invalid_argument("search: bad P range");

    SearchOutcome outcome;
    outcome.p_lo = spec.p_lo;
    outcome.p_hi = spec.p_hi;

    std::mutex mu;
    std::map<std::int64_t, PerPResult> results;
    std::atomic<std::int64_t> best_p{std::numeric_limits<std::int64_t>::max()};
    std::atomic<std::uint64_t> tuples{0};

    const std::int64_t count = spec.p_hi - spec.p_lo + 1;
    parallel_for_index(count, spec.jobs, [&](std::int64_t idx) {
        const std::int64_t P = spec.p_lo + idx;
        if (P > best_p.load(std::memory_order_relaxed)) return;  // a smaller hit already exists
        auto res = scan_p(spec, P);
        tuples += res.tuples;
        if (res.first) {
            std::int64_t cur = best_p.load();
            while (P < cur && !best_p.compare_exchange_weak(cur, P)) {
            }
            std::lock_guard lock(mu);
            results.emplace(P, std::move(res));
        }
    });

    outcome.tuples_tested = tuples.load();
    if (!results.empty()) {
        auto& best = results.begin()->second;
        outcome.hit = std::move(best.first);
        outcome.hits_at_p = std::move(best.all);
    }
    return outcome;
}

namespace {

const std::vector<TableRow>& rows_j4() {
    static const std::vector<TableRow> rows = {
        {5, 29, {12, 5}, 23, {}},    {6, 37, {3, 11}, 24, {}},    {7, 43, {12, 4}, 30, {}},
        {8, 53, {23, 3}, 39, {}},    {9, 61, {24, 3}, 48, {}},    {10, 61, {24, 3}, 57, {}},
        {11, 89, {4, 2}, 67, {}},    {12, 91, {31, 19}, 80, {}},  {13, 131, {17, 39}, 98, {}},
        {14, 137, {37, 16}, 112, {}},{15, 137, {37, 16}, 130, {}},{16, 137, {37, 16}, 150, {}},
        {17, 137, {37, 16}, 170, {}},{18, 181, {72, 101}, 190, {}},{19, 199, {74, 124}, 205, {}},
        {20, 199, {74, 124}, 220, {}},{21, 199, {74, 124}, {}, {}},{22, 277, {4, 16}, {}, {}},
        {23, 277, {4, 16}, {}, {}},  {24, 313, {25, 19}, {}, {}}, {25, 313, {25, 19}, 350, {}},
    };
    return rows;
}

const std::vector<TableRow>& rows_j5() {
    static const std::vector<TableRow> rows = {
        {6, 49, {6, 19}, 35, {}},    {7, 71, {2, 20}, 53, {}},    {8, 73, {27, 2}, 64, {}},
        {9, 73, {27, 2}, 81, {}},    {10, 89, {34, 2}, 99, {}},   {11, 89, {34, 2}, 121, {}},
        {12, 137, {37, 9}, 142, {}}, {13, 185, {43, 113}, 165, {}},{14, 211, {28, 12}, 190, {}},
        {15, 217, {100, 122}, 225, {}},{16, 233, {89, 3}, 250, {}},{17, 233, {89, 3}, 280, {}},
        {18, 233, {89, 5}, 320, {}}, {19, 289, {38, 57}, 360, {}},{20, 289, {38, 57}, 400, {}},
        {21, 313, {25, 19}, {}, {}}, {22, 313, {25, 19}, {}, {}}, {23, 313, {25, 19}, {}, {}},
        {24, 313, {25, 19}, {}, {}}, {25, 313, {25, 19}, 590, {}},
    };
    return rows;
}

const std::vector<TableRow>& rows_j6() {
    static const std::vector<TableRow> rows = {
        {7, 97, {35, 36, 43}, 70, 101},   {8, 109, {8, 37, 16}, 95, 121},
        {9, 109, {8, 37, 16}, 125, 151},  {10, 143, {11, 12, 28}, 150, 181},
        {11, 169, {26, 64, 46}, 182, 181},{12, 169, {65, 77, 19}, 218, 181},
        {13, 271, {47, 110, 30}, 254, 241},{14, 289, {16, 68, 5}, 296, 281},
        {15, 289, {34, 135, 99}, 337, 331},{16, 289, {34, 135, 99}, 380, 341},
        {17, 361, {18, 133, 33}, 429, 401},{18, 361, {38, 75, 33}, 478, 451},
        {19, 451, {7, 147, 46}, 530, 521},{20, 451, {7, 147, 46}, 584, 571},
        {21, 529, {22, 46, 28}, {}, 601}, {22, 529, {22, 46, 28}, {}, 661},
        {23, 599, {35, 267, 18}, {}, 751},{24, 601, {45, 189, 2}, {}, 781},
        {25, 601, {45, 189, 2}, {}, 881},
    };
    return rows;
}

}  // namespace

std::span<const TableRow> published_rows(int J) {
    switch (J) {
        case 4: return rows_j4();
        case 5: return rows_j5();
        case 6: return rows_j6();
        default: throw std::invalid_argument("published_rows: J must be 4, 5 or 6");
    }
}

std::vector<TableCheck> reproduce_tables(int J, bool rerun_search, int jobs) {
    const auto rows = published_rows(J);
    std::vector<TableCheck> checks(rows.size());
    parallel_for_index(static_cast<std::int64_t>(rows.size()), jobs, [&](std::int64_t idx) {
        const auto& row = rows[idx];
        TableCheck check;
        check.row = row;
        std::vector<std::int64_t> alphas{1};
        alphas.insert(alphas.end(), row.params.begin(), row.params.end() - 1);
        const std::int64_t beta = row.params.back();
        const bool conditions = girth8_conditions(alphas, beta, J, row.L, row.p_new);
        const auto matrix = vs_complete(alphas, beta, J, row.L, row.p_new);
        const bool eq = girth_from_equations(matrix, row.p_new, 8).is(8);
        const bool graph = girth_from_graph(matrix, row.p_new, 8).is(8);
        check.pass = conditions && eq && graph;
        if (rerun_search) {
            SearchSpec spec;
            spec.J = J;
            spec.L = row.L;
            spec.p_hi = row.p_new;
            spec.jobs = 1;
            if (auto outcome = search_min_p(spec); outcome.hit) check.p_ours = outcome.hit->P;
        }
        checks[idx] = std::move(check);
    });
    return checks;
}

}  // namespace vsqc
