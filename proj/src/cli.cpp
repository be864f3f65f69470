#include "zetalab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/errors.hpp"
#include "zetalab/kernels.hpp"
#include "zetalab/lemmas.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {
namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round12(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(num(v).c_str(), nullptr);
}

void write_file(const RunConfig& cfg, const std::string& name, const std::string& text, std::ostream& out) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::string path = (std::filesystem::path(cfg.output_dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << text;
    if (!f) throw IoError("write failed: " + path);
    out << "wrote " << path << "\n";
}

Report finish(Report r, bool ok, const std::string& notes) {
    r.passed = ok;
    r.notes = notes;
    return r;
}

}  // namespace

void RunConfig::validate() const {
    if (parallelism < 1) throw PreconditionError("parallelism must be >= 1");
    if (zero_count < 1) throw PreconditionError("zero_count must be >= 1");
}

double RunConfig::tolerance(const std::string& claim_id, double fallback) const {
    if (auto it = tolerance_overrides.find(claim_id); it != tolerance_overrides.end()) return it->second;
    if (tolerance_all) return *tolerance_all;
    return fallback;
}

ClaimContext RunConfig::context() const {
    validate();
    ClaimContext ctx;
    ctx.zero_count = zero_count;
    ctx.parallelism = parallelism;
    ctx.tol_overrides = tolerance_overrides;
    ctx.tol_all = tolerance_all;
    const std::string path = zero_table_path.value_or(std::string(ZETALAB_DATA_DIR) + "/zeros_10000.txt");
    try {
        ctx.table = std::make_shared<const ZeroTable>(load_zero_table(path, zero_count));
    } catch (const Error& e) {
        ctx.table_error = path + ": " + e.what();
    }
    return ctx;
}

void apply_tolerance(RunConfig& cfg, const std::string& spec) {
    const auto eq = spec.find('=');
    const std::string value = eq == std::string::npos ? spec : spec.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty() || !(v >= 0.0))
        throw PreconditionError("bad tolerance '" + spec + "': expected claim=value or value");
    if (eq == std::string::npos)
        cfg.tolerance_all = v;
    else
        cfg.tolerance_overrides[spec.substr(0, eq)] = v;
}

std::vector<double> parse_grid(const std::string& spec) {
    auto to_d = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v)) throw PreconditionError("bad grid spec '" + spec + "'");
        return v;
    };
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const std::string lo = spec.substr(0, dots);
        std::string hi = spec.substr(dots + 2);
        std::size_t n = 20;
        if (const auto colon = hi.find(':'); colon != std::string::npos) {
            const double nd = to_d(hi.substr(colon + 1));
            if (nd < 1 || nd != std::floor(nd)) throw PreconditionError("bad grid count in '" + spec + "'");
            n = static_cast<std::size_t>(nd);
            hi = hi.substr(0, colon);
        }
        return linspace(to_d(lo), to_d(hi), n);
    }
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_d(item));
    if (out.empty()) throw PreconditionError("empty grid spec");
    return out;
}

int exit_code(const std::vector<Report>& reports) {
    bool incon = false;
    for (const auto& r : reports) {
        if (r.inconclusive)
            incon = true;
        else if (!r.passed)
            return kFail;
    }
    return incon ? kInconclusive : kPass;
}

void print_reports(std::ostream& out, const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        out << (r.passed ? "PASS " : r.inconclusive ? "INCONCLUSIVE " : "FAIL ") << r.claim_id << " measured=[";
        for (std::size_t i = 0; i < r.measured.size(); ++i) out << (i ? ", " : "") << num(r.measured[i]);
        out << "] tolerance=" << num(r.tolerance);
        if (!r.notes.empty()) out << " (" << r.notes << ")";
        out << "\n";
    }
}

std::string reports_json(const std::vector<Report>& reports, bool with_runtime) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["claim_id"] = r.claim_id;
        j["passed"] = r.passed;
        j["inconclusive"] = r.inconclusive;
        auto m = nlohmann::ordered_json::array();
        for (double v : r.measured) {
            if (std::isfinite(v))
                m.push_back(round12(v));
            else
                m.push_back(nullptr);
        }
        j["measured"] = m;
        j["tolerance"] = round12(r.tolerance);
        j["notes"] = r.notes;
        if (with_runtime) j["runtime_s"] = std::round(r.runtime_s * 1000.0) / 1000.0;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
    s += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + num(row[i]);
        s += "\n";
    }
    return s;
}

int cmd_verify_constants(const RunConfig& cfg, std::ostream& out, const Constants& c) {
    const double tol = cfg.tolerance("constants", 5e-8);
    const double t1 = t1_min_bound();
    struct Row {
        const char* name;
        double value, printed;
    };
    const Row rows[] = {{"rho_sum_const", c.rho_sum_const, 0.0230957},
                        {"a_const", c.a_const, -0.0230957},
                        {"t1_min_bound", t1, 9.2518015},
                        {"ln_pi", c.ln_pi, 1.1447299},
                        {"euler_gamma", c.euler_gamma, 0.5772157}};
    std::vector<Report> reps;
    for (const auto& r : rows) {
        Report rep;
        rep.claim_id = r.name;
        rep.measured = {r.value, r.printed};
        rep.tolerance = tol;
        rep.passed = std::abs(r.value - r.printed) <= tol;
        out << r.name << " = " << num(r.value) << " (printed " << num(r.printed) << ")\n";
        reps.push_back(rep);
    }
    print_reports(out, reps);
    return exit_code(reps);
}

int cmd_verify_identities(const RunConfig& cfg, const IdentityGrid& grid, std::ostream& out) {
    const ClaimContext ctx = cfg.context();
    std::vector<ComplexPoint> pts = product_grid(grid.re, grid.im);
    pts.insert(pts.end(), grid.extra.begin(), grid.extra.end());
    double max_im = 0.0;
    for (const auto& p : pts) max_im = std::max(max_im, std::abs(p.im()));
    const std::vector<Zero> excl = max_im + 1.0 > 9.5 ? find_zeros(9.5, std::max(max_im + 1.0, 10.0)).zeros()
                                                       : std::vector<Zero>{};
    const std::size_t N = ctx.zero_budget();

    struct Identity {
        std::string id;
        double tol;
        std::function<double(ComplexPoint)> f;
        bool needs_table;
    };
    std::vector<Identity> ids = {
        {"functional_eq", cfg.tolerance("functional_eq", 1e-8), functional_eq_residual, false},
        {"sumdig", cfg.tolerance("sumdig", 1e-7), sumdig_residual, false},
        {"ip_antisymmetry", cfg.tolerance("ip_antisymmetry", 1e-12),
         [&](ComplexPoint s) { return ip_antisymmetry_residual(s, *ctx.table, N); }, true},
        {"dzeta_re", 0.0,
         [&](ComplexPoint s) {
             const ComplexEval ip = I_P(s, *ctx.table, N);
             if (!ip.converged) throw ConditioningError("I_P tail not converged at this height");
             return dzeta_re_residual(s, *ctx.table, N);
         },
         true},
    };
    std::vector<Report> reps;
    for (const auto& id : ids) {
        Report rep;
        rep.claim_id = id.id;
        if (id.needs_table && !ctx.table) {
            out << id.id << ": zero table unavailable: " << ctx.table_error << "\n";
            rep.notes = "zero table unavailable";
            reps.push_back(rep);
            continue;
        }
        const auto rows = residual_grid(pts, id.f, excl, grid.exclusion, cfg.parallelism);
        std::vector<std::vector<double>> data;
        std::size_t bad = 0, incon = 0, skipped = 0;
        double worst = 0.0;
        double tol = id.tol;
        if (id.id == "dzeta_re") {
            // Per-point tolerance: max(1e-3, I_P tail estimate at that point).
            tol = cfg.tolerance("dzeta_re", 1e-3);
        }
        for (const auto& r : rows) {
            if (r.skipped || r.inconclusive) {
                out << id.id << ": " << (r.skipped ? "skipped" : "inconclusive") << " at " << num(r.re) << "+"
                    << num(r.im) << "i: " << r.note << "\n";
                skipped += r.skipped;
                incon += r.inconclusive;
                continue;
            }
            data.push_back({r.re, r.im, r.residual});
            double t = tol;
            if (id.id == "dzeta_re")
                t = std::max(tol, I_P(ComplexPoint(r.re, r.im), *ctx.table, N).abs_error);
            if (r.residual > t) ++bad;
            worst = std::max(worst, r.residual);
        }
        write_file(cfg, "identity_" + id.id + ".csv", csv({"re", "im", "residual"}, data), out);
        rep.measured = {worst, static_cast<double>(data.size()), static_cast<double>(skipped),
                        static_cast<double>(incon)};
        rep.tolerance = tol;
        rep.passed = bad == 0 && incon == 0;
        rep.inconclusive = bad == 0 && incon > 0;
        rep.notes = "worst residual, evaluated, skipped, inconclusive";
        reps.push_back(rep);
    }
    print_reports(out, reps);
    return exit_code(reps);
}

namespace {

const ZeroTable& table_or_throw(const ClaimContext& ctx) {
    if (!ctx.table) throw IoError("zero table unavailable: " + ctx.table_error);
    return *ctx.table;
}

const Zero& zero_at(const ZeroTable& t, std::size_t idx) {
    if (idx < 1 || idx > t.count())
        throw RangeError("zero index " + std::to_string(idx) + " outside 1.." + std::to_string(t.count()));
    return t[idx - 1];
}

}  // namespace

int cmd_lemma1(const RunConfig& cfg, std::size_t zero_index, const std::vector<double>& radii, std::ostream& out) {
    const ClaimContext ctx = cfg.context();
    const ZeroTable& table = table_or_throw(ctx);
    const Zero& q = zero_at(table, zero_index);
    const double R = std::max(0.5, *std::max_element(radii.begin(), radii.end()));
    const ProbeConfig pc = make_probe_config(q, table, R, radii, ctx.zero_budget(), cfg.tolerance("tol_root", 1e-9));
    const double tol_res = cfg.tolerance("lemma1_probes", 1e-9);

    struct Row {
        ProbeResult p;
        Report midl;
    };
    const auto rows = parallel_map<Row>(radii.size(), cfg.parallelism, [&](std::size_t i) {
        Row r{probe(pc, radii[i]), Report{}};
        r.midl = re_midl_check(pc, radii[i]);
        return r;
    });
    std::vector<std::vector<double>> data;
    std::vector<Report> reps;
    for (const auto& row : rows) {
        const ProbeResult& p = row.p;
        data.push_back({p.r, p.m.re(), p.m.im(), p.theta, p.beta_tan, p.beta_floor, p.residual, p.found ? 1.0 : 0.0,
                        row.midl.measured.empty() ? NAN : row.midl.measured[0]});
        Report rep;
        rep.claim_id = "lemma1_probe r=" + num(p.r);
        rep.measured = {p.residual, p.m.im() - q.t, p.beta_tan};
        rep.tolerance = tol_res;
        const bool ok = p.found && p.residual <= tol_res && p.m.im() <= q.t &&
                        std::abs(std::abs(cplx(p.m) - q.rho()) - p.r) <= 1e-12;
        reps.push_back(finish(rep, ok, p.found ? "residual, Im m - Im q, tan beta" : "no m_r"));
        Report mid = row.midl;
        mid.claim_id = "re_midl r=" + num(p.r);
        reps.push_back(mid);
    }
    write_file(cfg, "lemma1_zero" + std::to_string(zero_index) + ".csv",
               csv({"r", "m_re", "m_im", "theta", "beta_tan", "beta_floor", "residual", "found", "re_midl_diff"}, data),
               out);
    try {
        reps.push_back(beta_scaling_fit(pc));
    } catch (const InsufficientDataError& e) {
        Report rep;
        rep.claim_id = "beta_scaling_fit";
        reps.push_back(finish(rep, false, e.what()));
    }
    const RealEval h1 = estimate_H1(pc);
    out << "H1(R=" << num(R) << ") sampled estimate: " << num(h1.value) << "\n";
    print_reports(out, reps);
    return exit_code(reps);
}

int cmd_lemma2(const RunConfig& cfg, std::size_t zero_index, std::optional<ComplexPoint> point, std::ostream& out) {
    std::vector<Report> reps;
    std::vector<std::vector<double>> data;
    if (point) {
        Report rep = lemma2_check(*point);
        data.push_back({point->re(), point->im(), rep.measured.at(1)});
        reps.push_back(rep);
    } else {
        const ClaimContext ctx = cfg.context();
        const ZeroTable& table = table_or_throw(ctx);
        const Zero& q = zero_at(table, zero_index);
        Report rep = lemma2_check(q);
        rep.tolerance = cfg.tolerance("lemma2", rep.tolerance);
        rep.passed = rep.measured.at(0) <= rep.tolerance;
        data.push_back({q.sigma, q.t, rep.measured.at(1)});
        reps.push_back(rep);
    }
    write_file(cfg, "lemma2.csv", csv({"sigma", "t", "difference"}, data), out);
    print_reports(out, reps);
    return exit_code(reps);
}

int cmd_lemma3(const RunConfig& cfg, const std::vector<double>& xs, const std::vector<double>& ys, std::ostream& out) {
    struct Cell {
        double S, G, G_err;
    };
    const auto cells = parallel_map<Cell>(xs.size() * ys.size(), cfg.parallelism, [&](std::size_t i) {
        const double x = xs[i / ys.size()];
        const double y = ys[i % ys.size()];
        const RealEval G = lemma3_G(x, y);
        return Cell{lemma3_S(x, y).value, G.value, G.abs_error};
    });
    std::vector<std::vector<double>> data;
    double max_g = -INFINITY, worst_agree = 0.0;
    bool neg = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const double x = xs[i / ys.size()];
        const double y = ys[i % ys.size()];
        const double agree = std::abs(cells[i].S - (1.0 - 2.0 * x) * cells[i].G);
        data.push_back({x, y, cells[i].S, cells[i].G, agree});
        max_g = std::max(max_g, cells[i].G);
        worst_agree = std::max(worst_agree, agree);
        if (!(cells[i].G + cells[i].G_err < 0.0)) neg = false;
    }
    write_file(cfg, "lemma3.csv", csv({"x", "y", "S", "G", "S_minus_1m2x_G"}, data), out);
    std::vector<Report> reps;
    Report g;
    g.claim_id = "lemma3_G_negative";
    g.measured = {max_g};
    reps.push_back(finish(g, neg, "max G on grid"));
    Report a;
    a.claim_id = "lemma3_factorization";
    a.measured = {worst_agree};
    a.tolerance = cfg.tolerance("lemma3_factorization", 1e-10);
    reps.push_back(finish(a, worst_agree <= a.tolerance, "max |S - (1-2x)G|"));
    double worst_half = 0.0;
    for (double y : ys) worst_half = std::max(worst_half, std::abs(lemma3_S(0.5, y).value));
    Report h;
    h.claim_id = "lemma3_S_half";
    h.measured = {worst_half};
    h.tolerance = cfg.tolerance("lemma3_S_half", 1e-12);
    reps.push_back(finish(h, worst_half <= h.tolerance, "max |S(1/2, y)|"));
    const double ymin = *std::min_element(ys.begin(), ys.end());
    Report p;
    p.claim_id = "lemma3_positive_part";
    const double pb = lemma3_positive_part_bound(ymin).value;
    p.measured = {ymin, pb};
    p.tolerance = 0.2594088;
    reps.push_back(finish(p, pb < p.tolerance, "bound at the smallest y"));
    print_reports(out, reps);
    return exit_code(reps);
}

int cmd_alpha_scan(const RunConfig& cfg, const std::vector<double>& sigmas, const std::vector<double>& ts,
                   std::ostream& out) {
    const auto grid = product_grid(sigmas, ts);
    struct Cell {
        RealEval a, dy;
    };
    const auto cells = parallel_map<Cell>(grid.size(), cfg.parallelism, [&](std::size_t i) {
        return Cell{alpha_series(grid[i].re(), grid[i].im()), alpha_partial_y(grid[i])};
    });
    std::vector<std::vector<double>> data;
    bool dy_neg = true;
    double max_dy = -INFINITY;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        data.push_back({grid[i].re(), grid[i].im(), cells[i].a.value, cells[i].a.abs_error, cells[i].dy.value});
        max_dy = std::max(max_dy, cells[i].dy.value);
        if (!(cells[i].dy.value + cells[i].dy.abs_error < 0.0)) dy_neg = false;
    }
    write_file(cfg, "alpha_scan.csv", csv({"sigma", "t", "alpha", "alpha_err", "dy_alpha"}, data), out);
    std::vector<Report> reps = {alpha_negativity_scan(sigmas, ts, cfg.parallelism)};
    Report d;
    d.claim_id = "alpha_dy_negative";
    d.measured = {max_dy};
    reps.push_back(finish(d, dy_neg, "max d_y alpha"));
    print_reports(out, reps);
    return exit_code(reps);
}

int cmd_zeros_generate(const RunConfig& cfg, double t_lo, double t_hi, const std::string& path, std::ostream& out) {
    const ZeroTable t = find_zeros(t_lo, t_hi, 1e-10, cfg.parallelism);
    save_zero_table(t, path);
    out << "generated " << t.count() << " ordinates on [" << num(t_lo) << ", " << num(t_hi) << "] -> " << path << "\n";
    return kPass;
}

int cmd_zeros_ingest(const RunConfig& /*cfg*/, const std::string& path, std::ostream& out) {
    const ZeroTable t = load_zero_table(path);
    out << "ingested " << t.count() << " ordinates from " << path << " (source: " << t.source() << ")\n";
    return kPass;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
    const ClaimContext ctx = cfg.context();
    if (!ctx.table) out << "warning: " << ctx.table_error << "\n";
    std::vector<Report> reps;
    for (const auto& claim : claim_ledger()) reps.push_back(run_claim(claim, ctx));
    write_file(cfg, "report.json", reports_json(reps), out);
    print_reports(out, reps);
    std::size_t passed = 0;
    for (const auto& r : reps) passed += r.passed;
    out << passed << "/" << reps.size() << " claims passed\n";
    return exit_code(reps);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zeta_lab: numerical checks of zeta-zero identities and lemmas"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value configuration file");

    RunConfig cfg;
    std::string zeros_path;
    std::size_t zero_count = cfg.zero_count;
    std::vector<std::string> tols;
    auto* zeros_opt = app.add_option("--zeros", zeros_path, "zero table path (env " + std::string(kZerosEnv) + ")");
    app.add_option("--zero-count", zero_count, "zero budget N")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.output_dir, "output directory");
    app.add_option("--tol", tols, "tolerance override claim=value, or a bare value for every claim");
    app.add_option("--parallelism", cfg.parallelism, "worker threads")->check(CLI::PositiveNumber);

    auto* constants = app.add_subcommand("verify-constants", "check printed constants");

    IdentityGrid grid;
    std::string re_spec, im_spec;
    std::vector<std::string> points;
    auto* identities = app.add_subcommand("verify-identities", "identity residual grids");
    identities->add_option("--re", re_spec, "real-part grid (lo..hi[:n] or list)");
    identities->add_option("--im", im_spec, "imaginary-part grid");
    identities->add_option("--point", points, "extra point re,im");
    identities->add_option("--exclusion", grid.exclusion, "skip points this close to a zero");

    std::size_t zero_idx = 1;
    std::string radii_spec = "0.4,0.2,0.1,0.05";
    auto* l1 = app.add_subcommand("lemma1", "balance point probes around one zero");
    l1->add_option("--zero", zero_idx, "1-based zero index")->check(CLI::PositiveNumber);
    l1->add_option("--radii", radii_spec, "probe radii");

    std::string l2_point;
    auto* l2 = app.add_subcommand("lemma2", "trigamma endpoint equality");
    l2->add_option("--zero", zero_idx, "1-based zero index")->check(CLI::PositiveNumber);
    l2->add_option("--point", l2_point, "hypothetical zero re,im instead of a table entry");

    std::string x_spec = "0.025..0.5:20", y_spec = "4..50:20";
    auto* l3 = app.add_subcommand("lemma3", "Lemma 3 series grid");
    l3->add_option("--x", x_spec, "x grid in (0, 1/2]");
    l3->add_option("--y", y_spec, "y grid, y >= 4");

    std::string sigma_spec = "0.05..0.5:10", t_spec = "8..60:27";
    auto* as = app.add_subcommand("alpha-scan", "alpha negativity scan");
    as->add_option("--sigma", sigma_spec, "sigma grid in (0, 1/2]");
    as->add_option("--t", t_spec, "t grid, t >= 8");

    std::vector<double> gen;
    std::string ingest, file;
    auto* zs = app.add_subcommand("zeros", "generate or ingest zero tables");
    auto* gen_opt = zs->add_option("--generate", gen, "t_lo t_hi")->expected(2);
    auto* ing_opt = zs->add_option("--ingest", ingest, "table file to validate");
    zs->add_option("--file", file, "output file for --generate (default <out>/zeros.txt)");
    gen_opt->excludes(ing_opt);
    ing_opt->excludes(gen_opt);

    auto* report = app.add_subcommand("report", "run every claim and write report.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        for (const auto& t : tols) apply_tolerance(cfg, t);
        cfg.zero_count = zero_count;
        if (zeros_opt->count() > 0) {
            cfg.zero_table_path = zeros_path;
        } else if (const char* env = std::getenv(kZerosEnv); env != nullptr && *env != '\0') {
            cfg.zero_table_path = std::string(env);
        }
        cfg.validate();

        if (constants->parsed()) return cmd_verify_constants(cfg, out);
        if (identities->parsed()) {
            if (!re_spec.empty()) grid.re = parse_grid(re_spec);
            if (!im_spec.empty()) grid.im = parse_grid(im_spec);
            for (const auto& p : points) {
                const auto v = parse_grid(p);
                if (v.size() != 2) throw PreconditionError("--point expects re,im");
                grid.extra.emplace_back(v[0], v[1]);
            }
            return cmd_verify_identities(cfg, grid, out);
        }
        if (l1->parsed()) return cmd_lemma1(cfg, zero_idx, parse_grid(radii_spec), out);
        if (l2->parsed()) {
            std::optional<ComplexPoint> pt;
            if (!l2_point.empty()) {
                const auto v = parse_grid(l2_point);
                if (v.size() != 2) throw PreconditionError("--point expects re,im");
                pt = ComplexPoint(v[0], v[1]);
            }
            return cmd_lemma2(cfg, zero_idx, pt, out);
        }
        if (l3->parsed()) return cmd_lemma3(cfg, parse_grid(x_spec), parse_grid(y_spec), out);
        if (as->parsed()) return cmd_alpha_scan(cfg, parse_grid(sigma_spec), parse_grid(t_spec), out);
        if (zs->parsed()) {
            if (gen_opt->count() > 0) {
                const std::filesystem::path path =
                    file.empty() ? std::filesystem::path(cfg.output_dir) / "zeros.txt" : std::filesystem::path(file);
                if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
                return cmd_zeros_generate(cfg, gen.at(0), gen.at(1), path.string(), out);
            }
            if (ing_opt->count() > 0) return cmd_zeros_ingest(cfg, ingest, out);
            err << "zeros: one of --generate or --ingest is required\n";
            return kUsage;
        }
        if (report->parsed()) return cmd_report(cfg, out);
    } catch (const TableError& e) {
        const char* kind = dynamic_cast<const BoundError*>(&e)   ? "BoundError"
                           : dynamic_cast<const OrderError*>(&e) ? "OrderError"
                                                                 : "ParseError";
        err << kind << ": " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}

}  // namespace zetalab::cli
