#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vsqc/codec.hpp"
#include "vsqc/constructions.hpp"
#include "vsqc/equivalence.hpp"
#include "vsqc/json_io.hpp"
#include "vsqc/monomial.hpp"
#include "vsqc/search.hpp"
#include "vsqc/sequences.hpp"

namespace vsqc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

struct Options {
    int jobs = 0;
    std::string out_path;
    std::string format;
};

// Payload goes to --out when given, standard output otherwise.
int emit(const Options& opt, std::ostream& out, const std::string& payload) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw std::invalid_argument("cannot write file: " + opt.out_path);
        f << payload;
        return kOk;
    }
    out << payload;
    return kOk;
}

void check_format(const Options& opt, const std::string& expected) {
    if (!opt.format.empty() && opt.format != expected)
        throw std::invalid_argument("this command emits " + expected + ", not " + opt.format);
}

std::int64_t resolve_p(const LoadedMatrix& loaded, std::int64_t flag_p, const char* cmd) {
    if (flag_p > 0) return flag_p;
    if (loaded.P) return *loaded.P;
    throw std::invalid_argument(std::string(cmd) + ": no circulant size (pass --P or store P in the matrix JSON)");
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
    std::string method;
    int J = 0;
    int L = 0;
    std::int64_t P = 0;
    std::string betas, d1, d2;
    bool verify = false;
};

int cmd_construct(const ConstructArgs& a, const Options& opt, std::ostream& out, std::ostream& err) {
    check_format(opt, "json");
    ConstructionResult result;
    if (a.method == "es") {
        result = construct_es(a.L);
    } else if (a.method == "td") {
        result = construct_td(a.L);
    } else if (a.method == "gcd") {
        const std::int64_t p = a.P > 0 ? a.P : static_cast<std::int64_t>(a.L) * a.L;
        result = construct_gcd_j4(a.L, p);
    } else if (a.method == "maxfn") {
        const std::int64_t p = a.P > 0 ? a.P : maxfn_min_p(a.L);
        result = construct_maxfn_j4(a.L, p);
    } else if (a.method == "theorem2") {
        result = construct_j6(a.L);
    } else if (a.method == "theorem1") {
        if (a.betas.empty()) throw std::invalid_argument("construct: --method theorem1 needs --betas");
        if (a.P <= 0) throw std::invalid_argument("construct: --method theorem1 needs --P");
        result = construct_j3(parse_int_list(a.betas), a.P);
    } else if (a.method == "dds") {
        if (a.d1.empty() || a.d2.empty()) throw std::invalid_argument("construct: --method dds needs --d1 and --d2");
        if (a.P <= 0) throw std::invalid_argument("construct: --method dds needs --P");
        result = construct_dds_j4(parse_int_list(a.d1), parse_int_list(a.d2), a.P);
    } else {
        throw std::invalid_argument("construct: unknown method " + a.method);
    }
    if (a.J != 0 && a.J != result.matrix.rows())
        throw std::invalid_argument("construct: --J does not match the method's column weight");
    if (a.L != 0 && a.L != result.matrix.cols())
        throw std::invalid_argument("construct: --L does not match the produced matrix");

    nlohmann::json j = matrix_to_json(result.matrix, result.P);
    j["method"] = to_string(result.method);
    nlohmann::json prov{{"L", result.provenance.L}};
    if (!result.provenance.sequence.empty()) prov["sequence"] = result.provenance.sequence;
    if (result.provenance.case_index > 0) prov["case"] = result.provenance.case_index;
    if (!result.provenance.note.empty()) prov["note"] = result.provenance.note;
    if (result.provenance.girth) prov["girth"] = girth_to_json(*result.provenance.girth);
    j["provenance"] = std::move(prov);

    int code = kOk;
    if (a.verify) {
        const auto eq = girth_from_equations(result.matrix, result.P, 8);
        const auto graph = girth_from_graph(result.matrix, result.P, 8);
        j["girth"] = girth_to_json(eq);
        const bool agree = eq.exact == graph.exact && eq.girth == graph.girth;
        j["agreement"] = agree;
        if (!agree || !eq.is(8)) {
            err << "verification failed: girth is not 8\n";
            code = kVerifyFail;
        }
    }
    emit(opt, out, j.dump(2) + "\n");
    return code;
}

// ---- girth --------------------------------------------------------------

int cmd_girth(const std::string& in, std::int64_t P, int cap, const std::string& oracle,
              const std::string& mask_path, const Options& opt, std::ostream& out, std::ostream& err) {
    check_format(opt, "json");
    const auto loaded = matrix_from_json(load_json(in));
    const std::int64_t p = resolve_p(loaded, P, "girth");
    std::optional<Mask> mask;
    if (!mask_path.empty()) mask = mask_from_json(load_json(mask_path));
    const Mask* maskp = mask ? &*mask : nullptr;

    nlohmann::json j;
    int code = kOk;
    if (oracle == "equations") {
        j = girth_to_json(girth_from_equations(loaded.matrix, p, cap, maskp));
    } else if (oracle == "bfs") {
        j = girth_to_json(girth_from_graph(lift(loaded.matrix, p, maskp), cap));
    } else if (oracle == "both") {
        const auto eq = girth_from_equations(loaded.matrix, p, cap, maskp);
        const auto graph = girth_from_graph(lift(loaded.matrix, p, maskp), cap);
        j = girth_to_json(eq);
        const bool agree = eq.exact == graph.exact && eq.girth == graph.girth;
        j["agreement"] = agree;
        if (!agree) {
            err << "girth engines disagree\n";
            code = kVerifyFail;
        }
    } else {
        throw std::invalid_argument("girth: --oracle must be bfs, equations or both");
    }
    emit(opt, out, j.dump(2) + "\n");
    return code;
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
    int J = 4;
    int L = 0;
    std::int64_t pmin = 2, pmax = 0;
    std::int64_t alpha_min = 0, alpha_max = 0, beta_min = 0, beta_max = 0;
    bool exhaustive = false;
};

int cmd_search(const SearchArgs& a, const Options& opt, std::ostream& out, std::ostream&) {
    check_format(opt, "json");
    SearchSpec spec;
    spec.J = a.J;
    spec.L = a.L;
    spec.p_lo = a.pmin;
    spec.p_hi = a.pmax;
    spec.alpha_lo = a.alpha_min;
    spec.alpha_hi = a.alpha_max;
    spec.beta_lo = a.beta_min;
    spec.beta_hi = a.beta_max;
    spec.exhaustive_per_p = a.exhaustive;
    spec.jobs = opt.jobs;
    const auto outcome = search_min_p(spec);

    nlohmann::json j;
    j["searched"] = {outcome.p_lo, outcome.p_hi};
    j["tuples_tested"] = outcome.tuples_tested;
    if (outcome.hit) {
        j["P"] = outcome.hit->P;
        j["alphas"] = outcome.hit->alphas;
        j["beta"] = outcome.hit->beta;
        j["matrix"] = matrix_to_json(outcome.hit->matrix, outcome.hit->P);
        if (a.exhaustive) {
            nlohmann::json hits = nlohmann::json::array();
            for (const auto& h : outcome.hits_at_p)
                hits.push_back({{"alphas", h.alphas}, {"beta", h.beta}});
            j["hits"] = std::move(hits);
        }
    } else {
        j["P"] = nullptr;
    }
    emit(opt, out, j.dump(2) + "\n");
    return kOk;
}

// ---- tables -------------------------------------------------------------

int cmd_tables(int J, bool rerun, const Options& opt, std::ostream& out, std::ostream& err) {
    check_format(opt, "csv");
    const auto checks = reproduce_tables(J, rerun, opt.jobs);
    std::ostringstream csv;
    csv << "L,P_paper,P_ours,status\n";
    bool all_pass = true;
    for (const auto& c : checks) {
        csv << c.row.L << "," << c.row.p_new << ",";
        if (c.p_ours) csv << *c.p_ours;
        csv << "," << (c.pass ? "pass" : "fail") << "\n";
        all_pass = all_pass && c.pass;
    }
    emit(opt, out, csv.str());
    if (!all_pass) {
        err << "some published rows failed verification\n";
        return kVerifyFail;
    }
    return kOk;
}

// ---- seq ----------------------------------------------------------------

int cmd_seq(int n, const Options& opt, std::ostream& out, std::ostream&) {
    check_format(opt, "csv");
    std::ostringstream csv;
    csv << "n,s_el,s_td,P\n";
    for (int i = 0; i < n; ++i) {
        csv << i << "," << es_term(i) << "," << td_term(i) << ",";
        if (i >= 2) csv << td_circ_size(i);
        csv << "\n";
    }
    emit(opt, out, csv.str());
    return kOk;
}

// ---- export -------------------------------------------------------------

int cmd_export(const std::string& in, std::int64_t P, const std::string& mask_path, const Options& opt,
               std::ostream& out, std::ostream&) {
    if (!opt.format.empty() && opt.format != "alist")
        throw std::invalid_argument("export: only --format alist is supported");
    const auto loaded = matrix_from_json(load_json(in));
    const std::int64_t p = resolve_p(loaded, P, "export");
    std::optional<Mask> mask;
    if (!mask_path.empty()) {
        auto masked = apply_mask(loaded.matrix, mask_from_json(load_json(mask_path)));
        mask = std::move(masked.mask);
    }
    emit(opt, out, to_alist(lift(loaded.matrix, p, mask ? &*mask : nullptr)));
    return kOk;
}

// ---- simulate -----------------------------------------------------------

struct SimulateArgs {
    std::string in;
    std::int64_t P = 0;
    std::string mask_path;
    std::string snr;
    std::int64_t frames = 10000;
    int iters = 50;
    std::uint64_t seed = 1;
    std::int64_t target_errors = 0;
};

int cmd_simulate(const SimulateArgs& a, const Options& opt, std::ostream& out, std::ostream& err) {
    check_format(opt, "csv");
    const auto loaded = matrix_from_json(load_json(a.in));
    const std::int64_t p = resolve_p(loaded, a.P, "simulate");
    std::optional<Mask> mask;
    if (!a.mask_path.empty()) {
        auto masked = apply_mask(loaded.matrix, mask_from_json(load_json(a.mask_path)));
        mask = std::move(masked.mask);
    }
    const auto code = lift(loaded.matrix, p, mask ? &*mask : nullptr);

    SimConfig cfg;
    cfg.code = &code;
    cfg.snr_db_points = parse_double_list(a.snr);
    if (cfg.snr_db_points.empty()) throw std::invalid_argument("simulate: --snr needs at least one point");
    cfg.max_iterations = a.iters;
    cfg.max_frames = a.frames;
    cfg.target_errors = a.target_errors;
    cfg.rng_seed = a.seed;
    cfg.jobs = opt.jobs;

    const auto stats = simulate(cfg);
    err << "rate " << stats.rate << ", block length " << code.num_vars() << "\n";
    std::ostringstream csv;
    csv << "snr_db,frames,bit_err,blk_err,ber,bler,avg_iters\n";
    csv.precision(10);
    for (const auto& pt : stats.points)
        csv << pt.snr_db << "," << pt.frames << "," << pt.bit_errors << "," << pt.block_errors << ","
            << pt.ber << "," << pt.bler << "," << pt.avg_iterations << "\n";
    emit(opt, out, csv.str());
    return kOk;
}

// ---- verify-conjectures -------------------------------------------------

int cmd_verify(int which, int l_max, const std::string& seq_name, const Options& opt, std::ostream& out,
               std::ostream& err) {
    check_format(opt, "json");
    nlohmann::json j;
    j["which"] = which;
    nlohmann::json failures = nlohmann::json::array();
    std::int64_t checked = 0;
    if (which == 1) {
        const auto report = sweep_td_range(3, l_max, opt.jobs);
        checked = report.checked;
        for (const auto& f : report.failures)
            failures.push_back({{"L", f.L}, {"P", f.P}, {"girth", girth_to_json(f.report)}});
    } else if (which == 2) {
        SequenceKind seq = seq_name == "td" ? SequenceKind::td() : SequenceKind::es();
        for (int L = 3; L <= l_max; ++L) {
            const std::int64_t px = 2 * es_term(L - 1) + 1;
            const auto report = sweep_odd_circulants(L, seq, 2 * px - 1, opt.jobs);
            checked += report.checked;
            for (const auto& f : report.failures)
                failures.push_back({{"L", f.L}, {"P", f.P}, {"girth", girth_to_json(f.report)}});
        }
    } else {
        throw std::invalid_argument("verify-conjectures: --which must be 1 or 2");
    }
    j["L_max"] = l_max;
    j["checked"] = checked;
    j["failures"] = failures;
    emit(opt, out, j.dump(2) + "\n");
    if (!failures.empty()) {
        err << failures.size() << " failures found\n";
        return kVerifyFail;
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"vertically symmetric girth-8 QC-LDPC exponent matrices: construction, verification, search, export and simulation"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps/search/simulation (0 = all cores)");
    app.add_option("--out", opt.out_path, "write the payload to this file instead of stdout");
    app.add_option("--format", opt.format, "payload format (json|csv|alist, validated per command)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build an exponent matrix by a named method");
    construct->add_option("--method", ca.method, "es|td|gcd|maxfn|theorem2|theorem1|dds")->required();
    construct->add_option("--J", ca.J, "column weight (validated against the method)");
    construct->add_option("--L", ca.L, "row weight");
    construct->add_option("--P", ca.P, "circulant size (methods with a free P)");
    construct->add_option("--betas", ca.betas, "comma-separated column sequence (theorem1)");
    construct->add_option("--d1", ca.d1, "first difference set (dds)");
    construct->add_option("--d2", ca.d2, "second difference set (dds)");
    construct->add_flag("--verify", ca.verify, "append a girth report from both engines");

    std::string g_in, g_oracle = "both", g_mask;
    std::int64_t g_p = 0;
    int g_cap = 12;
    auto* girth = app.add_subcommand("girth", "girth of a matrix at a circulant size");
    girth->add_option("--in", g_in, "matrix JSON file")->required();
    girth->add_option("--P", g_p, "circulant size (overrides the file)");
    girth->add_option("--cap", g_cap, "largest cycle length checked (even, <= 16)");
    girth->add_option("--oracle", g_oracle, "bfs|equations|both");
    girth->add_option("--mask", g_mask, "mask JSON file");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "minimum-circulant search for the geometric-column family");
    search->add_option("--J", sa.J, "column weight 4..7")->required();
    search->add_option("--L", sa.L, "row weight")->required();
    search->add_option("--pmax", sa.pmax, "largest circulant size (inclusive)")->required();
    search->add_option("--pmin", sa.pmin, "smallest circulant size");
    search->add_option("--alpha-min", sa.alpha_min, "alpha domain lower bound (default 2)");
    search->add_option("--alpha-max", sa.alpha_max, "alpha domain upper bound (default P-1)");
    search->add_option("--beta-min", sa.beta_min, "beta domain lower bound (default 2)");
    search->add_option("--beta-max", sa.beta_max, "beta domain upper bound (default P-1)");
    auto* first = search->add_flag("--first", "stop at the first hit per P (default)");
    search->add_flag("--exhaustive", sa.exhaustive, "collect every hit at the minimum P");
    (void)first;

    int t_j = 4;
    bool t_search = false;
    auto* tables = app.add_subcommand("tables", "verify the published benchmark rows");
    tables->add_option("--J", t_j, "column weight 4, 5 or 6")->required();
    tables->add_flag("--search", t_search, "re-run the search per row and report our minimum P");

    int seq_n = 16;
    auto* seq = app.add_subcommand("seq", "emit sequence terms and circulant sizes as CSV");
    seq->add_option("--n", seq_n, "number of leading terms");

    std::string e_in, e_mask;
    std::int64_t e_p = 0;
    auto* exp = app.add_subcommand("export", "export the lifted parity-check matrix (alist)");
    exp->add_option("--in", e_in, "matrix JSON file")->required();
    exp->add_option("--P", e_p, "circulant size (overrides the file)");
    exp->add_option("--mask", e_mask, "mask JSON file");

    SimulateArgs ma;
    auto* sim = app.add_subcommand("simulate", "BPSK/AWGN Monte Carlo with sum-product decoding");
    sim->add_option("--in", ma.in, "matrix JSON file")->required();
    sim->add_option("--P", ma.P, "circulant size (overrides the file)");
    sim->add_option("--mask", ma.mask_path, "mask JSON file");
    sim->add_option("--snr", ma.snr, "comma-separated Eb/N0 points in dB")->required();
    sim->add_option("--frames", ma.frames, "frame budget per point");
    sim->add_option("--iters", ma.iters, "decoder iteration cap");
    sim->add_option("--seed", ma.seed, "RNG seed");
    sim->add_option("--target-errors", ma.target_errors, "stop a point early after this many block errors");

    int v_which = 1, v_lmax = 16;
    std::string v_seq = "es";
    auto* verify = app.add_subcommand("verify-conjectures", "run the conjectured-construction sweeps");
    verify->add_option("--which", v_which, "1 = P(L) sweep, 2 = odd-P range sweep")->required();
    verify->add_option("--Lmax", v_lmax, "largest row weight");
    verify->add_option("--seq", v_seq, "sequence for sweep 2 (es|td)");

    // Let global flags (--jobs/--out/--format) appear after the subcommand.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(ca, opt, out, err);
        if (girth->parsed()) return cmd_girth(g_in, g_p, g_cap, g_oracle, g_mask, opt, out, err);
        if (search->parsed()) return cmd_search(sa, opt, out, err);
        if (tables->parsed()) return cmd_tables(t_j, t_search, opt, out, err);
        if (seq->parsed()) return cmd_seq(seq_n, opt, out, err);
        if (exp->parsed()) return cmd_export(e_in, e_p, e_mask, opt, out, err);
        if (sim->parsed()) return cmd_simulate(ma, opt, out, err);
        if (verify->parsed()) return cmd_verify(v_which, v_lmax, v_seq, opt, out, err);
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerifyFail;
    }
    err << "no command given\n";
    return kUsage;
}

}  // namespace vsqc::cli
