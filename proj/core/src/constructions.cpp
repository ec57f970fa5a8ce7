#include "vsqc/constructions.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "vsqc/equivalence.hpp"
#include "vsqc/parallel.hpp"

namespace vsqc {

std::string to_string(Method m) {
    switch (m) {
        case Method::j3_betas: return "theorem1";
        case Method::j3_es: return "es";
        case Method::j3_td: return "td";
        case Method::j4_gcd: return "gcd";
        case Method::j4_dds: return "dds";
        case Method::j4_maxfn: return "maxfn";
        case Method::j6_family: return "theorem2";
        case Method::custom: return "custom";
    }
    return "custom";
}

namespace {

ExponentMatrix j3_matrix(const std::vector<std::int64_t>& betas) {
    std::vector<std::int64_t> neg(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i) neg[i] = -betas[i];
    return ExponentMatrix::from_rows({std::vector<std::int64_t>(betas.size(), 0), betas, neg});
}

ExponentMatrix even_product(const std::vector<std::int64_t>& a, int L) {
    std::vector<std::vector<std::int64_t>> rows;
    for (auto x : a) {
        std::vector<std::int64_t> row(L);
        for (int r = 0; r < L; ++r) row[r] = x * r;
        rows.push_back(std::move(row));
    }
    for (auto x : a) {
        std::vector<std::int64_t> row(L);
        for (int r = 0; r < L; ++r) row[r] = -x * r;
        rows.push_back(std::move(row));
    }
    return ExponentMatrix::from_rows(rows);
}

}  // namespace

bool j3_betas_admissible(std::span<const std::int64_t> betas, std::int64_t P) {
    if (P < 2) throw std::invalid_argument("j3_betas_admissible: P must be >= 2");
    std::unordered_set<std::int64_t> residues;
    for (auto b : betas)
        if (!residues.insert(mod_p(b, P)).second)
            throw std::invalid_argument("j3_betas_admissible: betas must be pairwise distinct mod P");
    const int L = static_cast<int>(betas.size());
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            if (mod_p(2 * betas[i] - 2 * betas[j], P) == 0) return false;
    for (int k = 0; k < L; ++k)
        for (int i = 0; i < L; ++i) {
            if (i == k) continue;
            for (int j = i + 1; j < L; ++j) {
                if (j == k) continue;
                if (mod_p(2 * betas[k] - betas[i] - betas[j], P) == 0) return false;
            }
        }
    return true;
}

ConstructionResult construct_j3(const std::vector<std::int64_t>& betas, std::int64_t P) {
    if (betas.size() < 3) throw std::invalid_argument("construct_j3: L must be >= 3");
    if (!j3_betas_admissible(betas, P))
        throw std::invalid_argument("construct_j3: betas violate the distinct-sum conditions");
    ConstructionResult out{j3_matrix(betas), P, Method::j3_betas, {}};
    out.provenance.L = static_cast<int>(betas.size());
    out.provenance.sequence = "custom";
    return out;
}

ConstructionResult construct_es(int L) {
    if (L < 3) throw std::invalid_argument("construct_es: L must be >= 3");
    const auto betas = es_prefix(L);
    ConstructionResult out{j3_matrix(betas), 2 * es_term(L - 1) + 1, Method::j3_es, {}};
    out.provenance.L = L;
    out.provenance.sequence = "es";
    return out;
}

ConstructionResult construct_td(int L) {
    if (L < 3) throw std::invalid_argument("construct_td: L must be >= 3");
    const auto betas = td_prefix(L);
    ConstructionResult out{j3_matrix(betas), td_circ_size(L), Method::j3_td, {}};
    out.provenance.L = L;
    out.provenance.sequence = "td";
    out.provenance.girth = girth_from_equations(out.matrix, out.P, 8);
    if (!out.provenance.girth->is(8)) out.provenance.note = "girth check failed";
    return out;
}

SweepReport sweep_odd_circulants(int L, const SequenceKind& seq, std::int64_t P_hi, int jobs) {
    if (L < 3) throw std::invalid_argument("sweep: L must be >= 3");
    const std::int64_t P_x = 2 * es_term(L - 1) + 1;
    const auto betas = seq.prefix(L);
    const auto matrix = j3_matrix(betas);

    SweepReport report;
    {
        std::ostringstream os;
        os << "odd circulant sweep: L=" << L << " seq=" << seq.name() << " P in [" << P_x << "," << P_hi << "]";
        report.description = os.str();
    }
    if (P_hi < P_x) return report;
    const std::int64_t n = (P_hi - P_x) / 2 + 1;
    std::vector<std::optional<GirthReport>> bad(n);
    parallel_for_index(n, jobs, [&](std::int64_t idx) {
        const std::int64_t P = P_x + 2 * idx;
        auto g = girth_from_equations(matrix, P, 8);
        if (!g.is(8)) bad[idx] = std::move(g);
    });
    report.checked = n;
    for (std::int64_t idx = 0; idx < n; ++idx)
        if (bad[idx]) report.failures.push_back({P_x + 2 * idx, L, std::move(*bad[idx])});
    return report;
}

SweepReport sweep_td_range(int L_lo, int L_hi, int jobs) {
    if (L_lo < 3 || L_hi < L_lo) throw std::invalid_argument("sweep: range must satisfy 3 <= L_lo <= L_hi");
    SweepReport report;
    {
        std::ostringstream os;
        os << "two-direction sweep: L in [" << L_lo << "," << L_hi << "]";
        report.description = os.str();
    }
    const std::int64_t n = L_hi - L_lo + 1;
    std::vector<std::optional<SweepFailure>> bad(n);
    parallel_for_index(n, jobs, [&](std::int64_t idx) {
        const int L = L_lo + static_cast<int>(idx);
        auto result = construct_td(L);
        if (!result.provenance.girth->is(8))
            bad[idx] = SweepFailure{result.P, L, *result.provenance.girth};
    });
    report.checked = n;
    for (auto& f : bad)
        if (f) report.failures.push_back(std::move(*f));
    return report;
}

ConstructionResult construct_gcd_j4(int L, std::int64_t P) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("construct_gcd_j4: L must be odd and >= 3");
    if (P < static_cast<std::int64_t>(L) * L)
        throw std::invalid_argument("construct_gcd_j4: P must be >= L^2");
    ConstructionResult out{even_product({(L - 1) / 2, (L + 1) / 2}, L), P, Method::j4_gcd, {}};
    out.provenance.L = L;
    return out;
}

ConstructionResult construct_dds_j4(const std::vector<std::int64_t>& d1,
                                    const std::vector<std::int64_t>& d2, std::int64_t P) {
    if (P % 2 == 0) throw std::invalid_argument("construct_dds_j4: P must be odd");
    if (!is_disjoint_difference_pair(d1, d2, P))
        throw std::invalid_argument("construct_dds_j4: sets are not a disjoint difference pair mod P");
    ConstructionResult out{to_vs_j4(d1, d2, P), P, Method::j4_dds, {}};
    out.provenance.L = static_cast<int>(d1.size());
    return out;
}

std::int64_t maxfn_min_p(int L) {
    const std::int64_t bound = (3 * static_cast<std::int64_t>(L) * L + 3) / 4 + L - 1;
    return bound % 2 == 0 ? bound + 1 : bound;
}

ConstructionResult construct_maxfn_j4(int L, std::int64_t P) {
    if (L < 2) throw std::invalid_argument("construct_maxfn_j4: L must be >= 2");
    const std::int64_t bound = (3 * static_cast<std::int64_t>(L) * L + 3) / 4 + L - 1;
    if (P % 2 == 0 || P < bound)
        throw std::invalid_argument("construct_maxfn_j4: P must be odd and >= ceil(3L^2/4)+L-1");
    std::vector<std::int64_t> row1(L), row2(L);
    for (int r = 0; r < L; ++r) row1[r] = r;
    row2[0] = 0;
    for (int r = 0; r + 1 < L; ++r) row2[r + 1] = row2[r] + std::max<std::int64_t>(r + 2, L - r);
    ConstructionResult out{to_vs_j4(row1, row2, P), P, Method::j4_maxfn, {}};
    out.provenance.L = L;
    return out;
}

ConstructionResult construct_j6(int L) {
    if (L < 7) throw std::invalid_argument("construct_j6: L must be >= 7");
    const std::int64_t Lw = L;
    std::vector<std::int64_t> a;
    std::int64_t P = 0;
    int case_index = 0;
    switch (L % 6) {
        case 0:
        case 2:
            a = {2, Lw + 1, Lw + 3};
            P = (Lw + 2) * (Lw + 2) + 3;
            case_index = 1;
            break;
        case 1:
        case 3:
            a = {2, Lw, Lw + 2};
            P = (Lw + 1) * (Lw + 1) + 3;
            case_index = 2;
            break;
        case 4:
            a = {2, Lw + 3, Lw + 5};
            P = (Lw + 1) * (Lw + 5);
            case_index = 3;
            break;
        default:
            a = {2, Lw + 2, Lw + 4};
            P = Lw * (Lw + 4);
            case_index = 4;
            break;
    }
    ConstructionResult out{even_product(a, L), P, Method::j6_family, {}};
    out.provenance.L = L;
    out.provenance.case_index = case_index;
    return out;
}

}  // namespace vsqc
