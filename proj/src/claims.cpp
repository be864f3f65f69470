#include "zetalab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "zetalab/errors.hpp"
#include "zetalab/kernels.hpp"
#include "zetalab/lemmas.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

double ClaimContext::tolerance(const std::string& claim_id, double fallback) const {
    if (auto it = tol_overrides.find(claim_id); it != tol_overrides.end()) return it->second;
    if (tol_all) return *tol_all;
    return fallback;
}

std::size_t ClaimContext::zero_budget() const {
    return table ? std::min(zero_count, table->count()) : 0;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

std::vector<ComplexPoint> product_grid(const std::vector<double>& re, const std::vector<double>& im) {
    std::vector<ComplexPoint> out;
    out.reserve(re.size() * im.size());
    for (double x : re)
        for (double y : im) out.emplace_back(x, y);
    return out;
}

std::vector<ComplexPoint> standard_grid() { return product_grid(linspace(0.2, 0.8, 20), linspace(5.0, 60.0, 20)); }

const std::vector<Zero>& low_zeros() {
    static const std::vector<Zero> zs = find_zeros(9.5, 61.0).zeros();
    return zs;
}

namespace {

double distance_to_orbit(cplx s, const Zero& z) {
    const cplx r = z.rho();
    return std::min({std::abs(s - r), std::abs(s - std::conj(r)), std::abs(s - (1.0 - r)),
                     std::abs(s - (1.0 - std::conj(r)))});
}

}  // namespace

std::vector<ResidualRow> residual_grid(const std::vector<ComplexPoint>& points,
                                       const std::function<double(ComplexPoint)>& f,
                                       const std::vector<Zero>& zeros, double exclusion, int parallelism) {
    return parallel_map<ResidualRow>(points.size(), parallelism, [&](std::size_t i) {
        ResidualRow row;
        row.re = points[i].re();
        row.im = points[i].im();
        for (const Zero& z : zeros) {
            if (distance_to_orbit(points[i], z) < exclusion) {
                row.skipped = true;
                std::ostringstream os;
                os.precision(12);
                os << "within " << exclusion << " of zero t=" << z.t;
                row.note = os.str();
                return row;
            }
        }
        try {
            row.residual = f(points[i]);
        } catch (const Error& e) {
            row.inconclusive = true;
            row.note = e.what();
        }
        return row;
    });
}

double worst_residual(const std::vector<ResidualRow>& rows) {
    double w = 0.0;
    for (const auto& r : rows)
        if (!r.skipped && !r.inconclusive) w = std::max(w, r.residual);
    return w;
}

double dzeta_re_residual(ComplexPoint sp, const ZeroTable& table, std::size_t N) {
    const cplx s = sp;
    const ComplexEval l = zeta_log_deriv(sp);
    const ComplexEval ps = digamma(ComplexPoint(0.5 * s));
    const ComplexEval ip = I_P(sp, table, N);
    const double rhs = 0.5 * Constants::standard().ln_pi + (-0.5 * ps.value + ip.value).real();
    return std::abs(l.value.real() - rhs);
}

double ip_antisymmetry_residual(ComplexPoint sp, const ZeroTable& table, std::size_t N) {
    const cplx s = sp;
    return std::abs(I_P(ComplexPoint(1.0 - s), table, N).value + I_P(sp, table, N).value);
}

namespace {

const Constants kC = Constants::standard();

// Printed values this suite reproduces.
constexpr double kPrintedRhoSum = 0.0230957;
constexpr double kPrintedT1 = 9.2518015;
constexpr double kPrintedLnPi = 1.1447299;
constexpr double kPrintedGamma = 0.5772157;
constexpr double kPrintedCothSum = 0.3614490;
constexpr double kPrintedPartial = 1.8873330;
constexpr double kPrintedBracket = 1.8731141;
constexpr double kPrintedPositiveBound = 0.2594088;
constexpr double kPrintedComponent = 0.0002754;
constexpr double kHalfUlp7 = 5e-8;  // half a unit in the 7th decimal

const std::vector<double> kProbeRadii = {0.4, 0.2, 0.1, 0.05};
const std::vector<double> kFitRadii = {0.4, 0.2, 0.1, 0.05, 0.025};
constexpr double kProbeR = 0.5;

Report make(const std::string& id) {
    Report r;
    r.claim_id = id;
    return r;
}

const ZeroTable& need_table(const ClaimContext& ctx) {
    if (!ctx.table) throw PreconditionError("zero table unavailable: " + ctx.table_error);
    return *ctx.table;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Report c01_constants(const ClaimContext& ctx) {
    Report r = make("constants");
    r.tolerance = ctx.tolerance(r.claim_id, kHalfUlp7);
    const double t1 = t1_min_bound();
    const double d_rho = std::abs(kC.rho_sum_const - kPrintedRhoSum);
    const double d_t1 = std::abs(t1 - kPrintedT1);
    const double d_lnpi = std::abs(kC.ln_pi - kPrintedLnPi);
    const double d_gamma = std::abs(kC.euler_gamma - kPrintedGamma);
    const double d_sum = std::abs(kC.a_const + kC.rho_sum_const);
    r.measured = {kC.rho_sum_const, t1, kC.ln_pi, kC.euler_gamma, d_sum};
    r.passed = d_rho <= r.tolerance && d_t1 <= r.tolerance && d_lnpi <= r.tolerance && d_gamma <= r.tolerance &&
               d_sum <= 4.0 * kEps;
    r.notes = "rho_sum_const, t1_min_bound, ln pi, gamma, |a + rho_sum_const|";
    return r;
}

Report c02_closed_form_sum(const ClaimContext& ctx) {
    Report r = make("closed_form_sum");
    r.tolerance = ctx.tolerance(r.claim_id, 1e-6);
    const double v = sum_inv_n2_y2(4.0).value;
    const double closed = -1.0 / 32.0 + kPi / 8.0 / std::tanh(4.0 * kPi);
    constexpr std::size_t kTerms = 1000000;
    double brute = 0.0;
    for (std::size_t n = kTerms; n >= 1; --n) {
        const double d = static_cast<double>(n);
        brute += 1.0 / (d * d + 16.0);
    }
    const double A = static_cast<double>(kTerms) + 0.5;
    brute += 0.25 * (0.5 * kPi - std::atan(A / 4.0));
    r.measured = {v, closed, brute, std::abs(v - kPrintedCothSum)};
    r.passed = std::abs(v - closed) <= r.tolerance && std::abs(v - brute) <= r.tolerance &&
               std::abs(v - kPrintedCothSum) <= r.tolerance;
    r.notes = "sum 1/(n^2+16): library, closed form, 1e6-term sum + tail, |library - printed|";
    return r;
}

Report c03_partial_sum_bound(const ClaimContext& ctx) {
    Report r = make("partial_sum_bound");
    r.tolerance = ctx.tolerance(r.claim_id, 0.0);
    double partial = 0.0;
    for (int n = 1; n <= 9; ++n) partial += 16.0 / (n * (n * n + 16.0));
    const double bracket = kC.ln_pi + kC.euler_gamma + 1.0 / 64.0 + 0.375 * sum_inv_n2_y2(4.0).value;
    // Full series: 16/(n(n^2+16)) = 1/n - n/(n^2+16), summed to 1e6 plus the integral tail.
    double full = 0.0;
    constexpr int kTerms = 1000000;
    for (int n = kTerms; n >= 1; --n) {
        const double d = n;
        full += 16.0 / (d * (d * d + 16.0));
    }
    full += 8.0 / (static_cast<double>(kTerms) + 0.5) / (static_cast<double>(kTerms) + 0.5);
    r.measured = {partial, bracket, kPrintedBracket - kPrintedPartial, bracket - full};
    r.passed = partial > kPrintedPartial + r.tolerance && bracket <= kPrintedBracket &&
               kPrintedBracket - kPrintedPartial < 0.0 && bracket - partial < 0.0;
    r.notes = "partial sum n<=9, bracket ln(pi)+gamma+1/64+3/8 S(4), printed difference, bracket - full series";
    return r;
}

Report c04_zero_sum(const ClaimContext& ctx) {
    Report r = make("zero_sum_convergence");
    const std::size_t n = std::min<std::size_t>(1000, std::max<std::size_t>(ctx.zero_count, 1));
    const ZeroTable gen = find_zeros(10.0, 1425.0, 1e-10, ctx.parallelism);
    if (gen.count() < n) throw NotFoundError("find_zeros produced only " + std::to_string(gen.count()) + " zeros");
    const std::vector<Zero> head(gen.zeros().begin(), gen.zeros().begin() + static_cast<long>(n));
    const ZeroTable table(head, gen.source());
    const RealEval s = rho_sum_partial(table, n);
    const double bound = tail_bound(std::max(table[n - 1].t, 14.0));
    r.tolerance = ctx.tolerance(r.claim_id, bound + kHalfUlp7);
    const double d = std::abs(s.value - kPrintedRhoSum);
    r.measured = {s.value, d, bound, static_cast<double>(n), table[n - 1].t};
    r.passed = d <= r.tolerance && s.value <= kC.rho_sum_const;
    r.notes = "partial sum, |partial - printed|, tail_bound(t_N), N, t_N";
    return r;
}

Report c05_identity_grids(const ClaimContext& ctx) {
    Report r = make("identity_grids");
    const double tol_fe = ctx.tolerance(r.claim_id, 1e-8);
    const double tol_sd = 10.0 * tol_fe;
    r.tolerance = tol_fe;
    const auto grid = standard_grid();
    const auto fe = residual_grid(grid, functional_eq_residual, low_zeros(), 0.05, ctx.parallelism);
    const auto sd = residual_grid(grid, sumdig_residual, low_zeros(), 0.05, ctx.parallelism);
    std::size_t skipped = 0, incon = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        skipped += fe[i].skipped;
        incon += fe[i].inconclusive + sd[i].inconclusive;
    }
    const double wfe = worst_residual(fe);
    const double wsd = worst_residual(sd);
    r.measured = {wfe, wsd, static_cast<double>(skipped), static_cast<double>(incon)};
    const bool within = wfe <= tol_fe && wsd <= tol_sd;
    r.passed = within && incon == 0;
    r.inconclusive = within && incon > 0;
    r.notes = "worst functional-equation residual (tol), worst sumdig residual (10 tol), skipped, inconclusive";
    return r;
}

Report c06_ip_antisymmetry(const ClaimContext& ctx) {
    Report r = make("ip_antisymmetry");
    r.tolerance = ctx.tolerance(r.claim_id, 1e-12);
    const ZeroTable& table = need_table(ctx);
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> ux(0.05, 0.95), uy(1.0, 100.0);
    std::vector<ComplexPoint> pts;
    for (int i = 0; i < 20; ++i) {
        const double x = ux(rng);
        const double y = uy(rng);
        pts.emplace_back(x, y);
    }
    double worst = 0.0;
    std::vector<std::size_t> budgets;
    for (std::size_t n : {std::size_t{0}, std::size_t{10}, std::size_t{1000}}) budgets.push_back(std::min(n, ctx.zero_budget()));
    for (std::size_t n : budgets)
        for (const auto& p : pts) worst = std::max(worst, ip_antisymmetry_residual(p, table, n));
    r.measured = {worst, static_cast<double>(budgets.back())};
    r.passed = worst <= r.tolerance;
    r.notes = "worst |I_P(1-s) + I_P(s)| over 20 seeded points and N in {0, 10, 1000}, largest N used";
    return r;
}

Report c07_dzeta_re(const ClaimContext& ctx) {
    Report r = make("dzeta_re_reconstruction");
    const ZeroTable& table = need_table(ctx);
    const std::size_t nmax = ctx.zero_budget();
    std::vector<std::size_t> ns;
    for (std::size_t n : {std::size_t{100}, std::size_t{1000}, std::size_t{10000}})
        if (n <= nmax) ns.push_back(n);
    if (ns.empty()) ns.push_back(nmax);
    const ComplexPoint s(0.5, 9.0);
    const ComplexPoint off(0.3, 9.0);
    // On Re s = 1/2 every orbit term is purely imaginary, so the residual there is
    // rounding only; the off-line point shows the decrease with N.
    constexpr double kFlatFloor = 1e-12;
    std::vector<double> on, offv;
    for (std::size_t n : ns) {
        on.push_back(dzeta_re_residual(s, table, n));
        offv.push_back(dzeta_re_residual(off, table, n));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (on[i] > on[i - 1] + kFlatFloor) decreasing = false;
        if (!(offv[i] < offv[i - 1])) decreasing = false;
    }
    const std::size_t nlast = ns.back();
    const double tail = nlast > 0 ? tail_bound(std::max(table[nlast - 1].t, 14.0)) : tail_bound(14.0);
    r.tolerance = ctx.tolerance(r.claim_id, std::max(1e-3, tail));
    r.measured = {on.back(), offv.back(), static_cast<double>(nlast)};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        r.measured.push_back(on[i]);
        r.measured.push_back(offv[i]);
    }
    r.passed = decreasing && on.back() <= r.tolerance && offv.back() <= r.tolerance;
    r.notes = "residual at 0.5+9i and 0.3+9i for the largest N, N, then (on, off) per N in {1e2, 1e3, 1e4}";
    return r;
}

struct ProbeRow {
    std::size_t zero;
    ProbeResult p;
    Report midl;
};

std::vector<ProbeRow> probe_rows(const ClaimContext& ctx, const ZeroTable& table) {
    const std::size_t nz = std::min<std::size_t>(10, table.count());
    const std::size_t total = nz * kProbeRadii.size();
    return parallel_map<ProbeRow>(total, ctx.parallelism, [&](std::size_t i) {
        const std::size_t z = i / kProbeRadii.size();
        const double rad = kProbeRadii[i % kProbeRadii.size()];
        const ProbeConfig cfg = make_probe_config(table[z], table, kProbeR, kProbeRadii, ctx.zero_budget());
        ProbeRow row{z, probe(cfg, rad), Report{}};
        row.midl = re_midl_check(cfg, rad);
        return row;
    });
}

Report c08_lemma1_probes(const ClaimContext& ctx) {
    Report r = make("lemma1_probes");
    const ZeroTable& table = need_table(ctx);
    r.tolerance = ctx.tolerance(r.claim_id, 1e-9);
    const auto rows = probe_rows(ctx, table);
    std::size_t found = 0;
    double worst_res = 0.0, worst_radius = 0.0, worst_im = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (!row.p.found) continue;
        ++found;
        const cplx q = table[row.zero].rho();
        worst_res = std::max(worst_res, row.p.residual);
        worst_radius = std::max(worst_radius, std::abs(std::abs(cplx(row.p.m) - q) - row.p.r));
        worst_im = std::max(worst_im, row.p.m.im() - q.imag());
    }
    const bool probes_ok = found == rows.size() && !rows.empty() && worst_res <= r.tolerance &&
                           worst_radius <= 1e-12 && worst_im <= 0.0;

    std::ostringstream notes;
    notes << "max |F(m_r)|, max ||m-q|-r|, max(Im m - Im q), found, probes, slope fits passed; ";
    std::size_t fits_ok = 0;
    const std::size_t nfit = std::min<std::size_t>(5, table.count());
    for (std::size_t z = 0; z < nfit; ++z) {
        const ProbeConfig cfg = make_probe_config(table[z], table, kProbeR, kFitRadii, ctx.zero_budget());
        try {
            const Report fit = beta_scaling_fit(cfg);
            fits_ok += fit.passed;
            notes << "zero " << z + 1 << " slope " << fmt(fit.measured[0]) << "; ";
        } catch (const InsufficientDataError& e) {
            notes << "zero " << z + 1 << ": " << e.what() << "; ";
        }
    }
    r.measured = {worst_res, worst_radius, worst_im, static_cast<double>(found), static_cast<double>(rows.size()),
                  static_cast<double>(fits_ok)};
    r.passed = probes_ok && fits_ok == nfit && nfit == 5;
    r.notes = notes.str();
    return r;
}

Report c09_re_midl(const ClaimContext& ctx) {
    Report r = make("re_midl");
    const ZeroTable& table = need_table(ctx);
    r.tolerance = ctx.tolerance(r.claim_id, 1e-6);
    const auto rows = probe_rows(ctx, table);
    double worst = 0.0;
    std::size_t checked = 0;
    bool ok = !rows.empty();
    for (const auto& row : rows) {
        if (!row.p.found) continue;
        ++checked;
        const double d = row.midl.measured.at(0);
        worst = std::max(worst, d);
        if (d > r.tolerance + (row.midl.tolerance - 1e-6)) ok = false;
    }
    r.measured = {worst, static_cast<double>(checked)};
    r.passed = ok && checked > 0;
    r.notes = "max |Re zeta'/zeta(m_r) - alpha(m_r)| over found probes, probes checked";
    return r;
}

Report c10_lemma2(const ClaimContext& ctx) {
    Report r = make("lemma2_endpoint");
    const ZeroTable& table = need_table(ctx);
    r.tolerance = ctx.tolerance(r.claim_id, 1e-10);
    const std::size_t nz = std::min<std::size_t>(10, table.count());
    double worst = 0.0;
    for (std::size_t z = 0; z < nz; ++z) worst = std::max(worst, lemma2_check(table[z]).measured.at(0));

    // g_arc_derivative at r = 0.2 and r = 0.05 for the first three zeros, measured as
    // distance to the limit (1/2) alpha(q) d_x alpha(q). On the critical line both radii
    // sit at that limit to rounding, so the smaller radius passes when it is no farther
    // from the limit than the larger one or lies within its own error estimate.
    bool trend = nz >= 3;
    std::ostringstream notes;
    notes << "max lemma 2 difference over " << nz << " zeros; then per zero: limit, v(0.2), v(0.05), err(0.05)";
    r.measured = {worst};
    for (std::size_t z = 0; z < std::min<std::size_t>(3, nz); ++z) {
        const ProbeConfig cfg = make_probe_config(table[z], table, kProbeR, kProbeRadii, ctx.zero_budget());
        const ComplexPoint q(table[z].rho());
        const double limit = 0.5 * alpha(q).value * alpha_partial_x(q).value;
        const RealEval big = g_arc_derivative(cfg, 0.2);
        const RealEval small = g_arc_derivative(cfg, 0.05);
        const double d_big = std::abs(big.value - limit);
        const double d_small = std::abs(small.value - limit);
        if (d_small > std::max(d_big, small.abs_error)) trend = false;
        r.measured.insert(r.measured.end(), {limit, big.value, small.value, small.abs_error});
    }
    r.passed = worst <= r.tolerance && trend;
    r.notes = notes.str();
    return r;
}

Report c11_lemma3(const ClaimContext& ctx) {
    Report r = make("lemma3");
    r.tolerance = ctx.tolerance(r.claim_id, 1e-12);
    const auto ys = linspace(4.0, 50.0, 20);
    std::vector<double> xs(20);
    for (std::size_t i = 0; i < 20; ++i) xs[i] = 0.025 * static_cast<double>(i + 1);
    double worst_half = 0.0;
    for (double y : ys) worst_half = std::max(worst_half, std::abs(lemma3_S(0.5, y).value));
    struct Cell {
        double g = 0.0, g_err = 0.0, agree = 0.0;
    };
    const auto cells = parallel_map<Cell>(xs.size() * ys.size(), ctx.parallelism, [&](std::size_t i) {
        const double x = xs[i / ys.size()];
        const double y = ys[i % ys.size()];
        const RealEval G = lemma3_G(x, y);
        const RealEval S = lemma3_S(x, y);
        return Cell{G.value, G.abs_error, std::abs(S.value - (1.0 - 2.0 * x) * G.value)};
    });
    double max_g = -std::numeric_limits<double>::infinity();
    double worst_agree = 0.0;
    bool all_neg = true;
    for (const auto& c : cells) {
        max_g = std::max(max_g, c.g);
        worst_agree = std::max(worst_agree, c.agree);
        if (!(c.g + c.g_err < 0.0)) all_neg = false;
    }
    const double p4 = lemma3_positive_part_bound(4.0).value;
    const double ch = std::cosh(2.0 * kPi);
    const double comp = kPi * kPi / 8.0 * 16.0 / (ch * ch);
    r.measured = {worst_half, max_g, worst_agree, p4, comp};
    r.passed = worst_half <= r.tolerance && all_neg && worst_agree <= 1e-10 && p4 < kPrintedPositiveBound &&
               comp < kPrintedComponent;
    r.notes = "max |S(1/2,y)|, max G on grid, max |S - (1-2x)G|, positive-part bound at y=4, cosh component";
    return r;
}

Report c12_alpha_negativity(const ClaimContext& ctx) {
    Report r = make("alpha_negativity");
    r.tolerance = ctx.tolerance(r.claim_id, 0.0);
    std::vector<double> sig, ts;
    for (int i = 1; i <= 10; ++i) sig.push_back(0.05 * i);
    for (int t = 8; t <= 60; t += 2) ts.push_back(t);
    const Report scan = alpha_negativity_scan(sig, ts, ctx.parallelism);
    const auto grid = product_grid(sig, ts);
    const auto dy = parallel_map<RealEval>(grid.size(), ctx.parallelism,
                                           [&](std::size_t i) { return alpha_partial_y(grid[i]); });
    double max_dy = -std::numeric_limits<double>::infinity();
    bool dy_neg = true;
    for (const auto& e : dy) {
        max_dy = std::max(max_dy, e.value);
        if (!(e.value + e.abs_error < -r.tolerance)) dy_neg = false;
    }
    r.measured = scan.measured;
    r.measured.push_back(max_dy);
    r.passed = scan.passed && scan.measured.at(0) < -r.tolerance && dy_neg;
    r.inconclusive = scan.inconclusive && dy_neg;
    r.notes = "max alpha_series, its sigma, its t, max d_y alpha";
    return r;
}

Report c13_specfun(const ClaimContext& ctx) {
    Report r = make("specfun_properties");
    r.tolerance = ctx.tolerance(r.claim_id, 1e-9);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(0.05, 2.0), uy(-200.0, 200.0), uy_ref(-50.0, 50.0);
    double rec = 0.0, refl = 0.0, conj_d = 0.0, fd = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const cplx z(ux(rng), uy(rng));
        const cplx a = digamma(ComplexPoint(z + 1.0)).value;
        const cplx b = digamma(ComplexPoint(z)).value;
        rec = std::max(rec, std::abs(a - b - 1.0 / z));
        const cplx dc = digamma(ComplexPoint(std::conj(z))).value;
        conj_d = std::max(conj_d, std::abs(dc - std::conj(b)) / (std::abs(b) + 1.0));
        const cplx tc = trigamma(ComplexPoint(std::conj(z))).value;
        const cplx t = trigamma(ComplexPoint(z)).value;
        conj_d = std::max(conj_d, std::abs(tc - std::conj(t)) / (std::abs(t) + 1.0));
    }
    for (int i = 0; i < 200; ++i) {
        const cplx z(ux(rng) - 1.0, uy_ref(rng));
        if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05) continue;
        const cplx lhs = digamma(ComplexPoint(1.0 - z)).value - digamma(ComplexPoint(z)).value;
        refl = std::max(refl, std::abs(lhs - kPi / std::tan(kPi * z)));
        constexpr double h = 1e-4;
        const cplx t = trigamma(ComplexPoint(z)).value;
        const cplx d = (digamma(ComplexPoint(z + h)).value - digamma(ComplexPoint(z - h)).value) / (2.0 * h);
        fd = std::max(fd, std::abs(t - d) / std::abs(t));
    }
    const double lg = std::max({std::abs(log_gamma(ComplexPoint(1.0, 0.0)).value),
                                std::abs(log_gamma(ComplexPoint(2.0, 0.0)).value),
                                std::abs(log_gamma(ComplexPoint(0.5, 0.0)).value - 0.5 * kC.ln_pi),
                                std::abs(log_gamma(ComplexPoint(5.0, 0.0)).value - std::log(24.0))});
    const double classical =
        std::max({std::abs(digamma(ComplexPoint(1.0, 0.0)).value + kC.euler_gamma),
                  std::abs(digamma(ComplexPoint(0.5, 0.0)).value + kC.euler_gamma + 2.0 * std::log(2.0)),
                  std::abs(trigamma(ComplexPoint(1.0, 0.0)).value - kPi * kPi / 6.0)});
    r.measured = {rec, refl, conj_d, fd, lg, classical};
    r.passed = rec <= r.tolerance && refl <= r.tolerance && conj_d <= 16.0 * kEps && fd <= 1e-5 && lg <= 1e-12 &&
               classical <= 1e-12;
    r.notes = "recurrence, reflection, relative conjugation, trigamma vs FD (rel), log_gamma classical, psi classical";
    return r;
}

Report c14_zero_finder(const ClaimContext& ctx) {
    Report r = make("zero_finder");
    r.tolerance = ctx.tolerance(r.claim_id, 1e-6);
    const ZeroTable gen = find_zeros(10.0, 50.0, 1e-10, ctx.parallelism);
    const std::string text = format_zero_table(gen);
    std::istringstream in(text);
    const ZeroTable back = parse_zero_table(in, "roundtrip");
    const bool same = format_zero_table(back) == text && back.source() == gen.source();
    const double first = gen.count() > 0 ? gen[0].t : 0.0;
    r.measured = {static_cast<double>(gen.count()), first, same ? 1.0 : 0.0};
    r.passed = gen.count() == 10 && std::abs(first - 14.134725) <= r.tolerance && same;
    r.notes = "count on [10, 50], first ordinate, byte-exact round trip";
    return r;
}

}  // namespace

const std::vector<Claim>& claim_ledger() {
    static const std::vector<Claim> ledger = {
        {1, "constants", "printed constants to 7 digits", 1.0, c01_constants},
        {2, "closed_form_sum", "sum 1/(n^2+16) closed form and brute force", 5.0, c02_closed_form_sum},
        {3, "partial_sum_bound", "nine-term partial sum and final bracket", 1.0, c03_partial_sum_bound},
        {4, "zero_sum_convergence", "paired zero sum over 1000 generated zeros", 120.0, c04_zero_sum},
        {5, "identity_grids", "functional equation and sumdig residual grids", 60.0, c05_identity_grids},
        {6, "ip_antisymmetry", "I_P(1-s) = -I_P(s)", 10.0, c06_ip_antisymmetry},
        {7, "dzeta_re_reconstruction", "Re zeta'/zeta from the zero kernel", 30.0, c07_dzeta_re},
        {8, "lemma1_probes", "balance point probes and tan beta scaling", 120.0, c08_lemma1_probes},
        {9, "re_midl", "Re zeta'/zeta(m_r) = alpha(m_r)", 120.0, c09_re_midl},
        {10, "lemma2_endpoint", "trigamma equality and g arc derivative", 60.0, c10_lemma2},
        {11, "lemma3", "Lemma 3 series, signs and bounds", 30.0, c11_lemma3},
        {12, "alpha_negativity", "alpha < 0 and d_y alpha < 0 on the grid", 30.0, c12_alpha_negativity},
        {13, "specfun_properties", "digamma, trigamma, log-gamma properties", 10.0, c13_specfun},
        {14, "zero_finder", "zeros on [10, 50] and table round trip", 60.0, c14_zero_finder},
    };
    return ledger;
}

Report run_claim(const Claim& claim, const ClaimContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        rep = claim.run(ctx);
    } catch (const std::exception& e) {
        rep = Report{};
        rep.claim_id = claim.id;
        rep.passed = false;
        rep.notes = std::string("error: ") + e.what();
    }
    rep.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rep.runtime_s > claim.budget_s) {
        rep.passed = false;
        rep.inconclusive = false;
        rep.notes += "; runtime " + fmt(rep.runtime_s) + " s over budget " + fmt(claim.budget_s) + " s";
    }
    return rep;
}

}  // namespace zetalab
