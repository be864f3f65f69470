#include "zetalab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zetalab/kernels.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {
namespace {

const Constants kC = Constants::standard();

ComplexEval log_deriv(cplx s) { return zeta_log_deriv(ComplexPoint(s), kLemmaTol); }

void check_alpha_domain(double x, double y, const char* who) {
    if (!(x > 0.0 && x < 1.0) || !(y > 0.0) || !std::isfinite(y))
        throw DomainError(std::string(who) + ": requires 0 < x < 1, y > 0");
}

void check_lemma3_domain(double x, double y, const char* who) {
    if (!(x > 0.0 && x <= 0.5) || !(y >= 4.0) || !std::isfinite(y))
        throw DomainError(std::string(who) + ": requires 0 < x <= 1/2, y >= 4");
}

// Summation cut for the Lemma 3 series; well past the y-scale so the tail is smooth.
std::size_t lemma3_terms(double y) { return static_cast<std::size_t>(std::ceil(20.0 * y)) + 400; }

double alpha_summand(double x, double y, double n) {
    const double a = 2.0 * n + x;
    const double b = 2.0 * n + 1.0 - x;
    return a / (a * a + y * y) + b / (b * b + y * y) - 1.0 / n;
}

double s_summand(double x, double y, double n) {
    const double a = 2.0 * n + x;
    const double b = 2.0 * n + 1.0 - x;
    const double p = a * a + y * y;
    const double q = b * b + y * y;
    return (a * a - y * y) / (p * p) - (b * b - y * y) / (q * q);
}

double g_summand(double x, double y, double n) {
    const double a = 2.0 * n + x;
    const double b = 2.0 * n + 1.0 - x;
    const double p = a * a + y * y;
    const double q = b * b + y * y;
    return (4.0 * n + 1.0) / (p * q) * (1.0 - 2.0 * y * y * (p + q) / (p * q));
}

double arc_y(const Zero& q, double r, double x) {
    const double d = q.sigma - x;
    return q.t - std::sqrt(r * r - d * d);
}

}  // namespace

RealEval alpha(ComplexPoint sp) {
    const cplx s = sp;
    const ComplexEval a = digamma(ComplexPoint(0.5 * s));
    const ComplexEval b = digamma(ComplexPoint(0.5 * (1.0 - s)));
    RealEval out;
    out.value = 0.5 * kC.ln_pi - 0.25 * (a.value.real() + b.value.real());
    out.abs_error = 0.25 * (a.abs_error + b.abs_error) + 4.0 * kEps * std::abs(out.value);
    out.terms_used = a.terms_used + b.terms_used;
    return out;
}

RealEval alpha_series(double x, double y, std::size_t terms) {
    check_alpha_domain(x, y, "alpha_series");
    const std::size_t n_cut = terms > 0 ? terms : static_cast<std::size_t>(std::ceil(10.0 * y)) + 200;
    double sum = x / (x * x + y * y) + (1.0 - x) / ((1.0 - x) * (1.0 - x) + y * y);
    double mag = std::abs(sum);
    for (std::size_t n = 1; n < n_cut; ++n) {
        const double f = alpha_summand(x, y, static_cast<double>(n));
        sum += f;
        mag += 1.0 / static_cast<double>(n);
    }
    // sum_{n >= N} f(n) ~ int_{N-1/2}^inf f, with the antiderivative
    // (1/4) ln((2u+x)^2+y^2) + (1/4) ln((2u+1-x)^2+y^2) - ln u  ->  ln 2.
    const double A = static_cast<double>(n_cut) - 0.5;
    const double a = 2.0 * A + x;
    const double b = 2.0 * A + 1.0 - x;
    const double four_a2 = 4.0 * A * A;
    const double tail = -0.25 * std::log1p((a * a + y * y - four_a2) / four_a2) -
                        0.25 * std::log1p((b * b + y * y - four_a2) / four_a2);
    const double fprime = alpha_summand(x, y, static_cast<double>(n_cut)) -
                          alpha_summand(x, y, static_cast<double>(n_cut - 1 > 0 ? n_cut - 1 : 1));

    RealEval out;
    // Midpoint correction: sum_n f(n) - int f ~ f'(A)/24.
    const double n_d = static_cast<double>(n_cut);
    out.value = 0.5 * (kC.ln_pi + kC.euler_gamma + sum + tail + fprime / 24.0);
    out.abs_error = 0.5 * (std::abs(fprime) * 8.0 / (24.0 * n_d) + 4.0 * kEps * mag);
    out.terms_used = n_cut;
    out.converged = static_cast<double>(n_cut) >= 4.0 * y + 50.0;
    return out;
}

RealEval alpha_partial_x(ComplexPoint sp) {
    const cplx s = sp;
    const ComplexEval a = trigamma(ComplexPoint(0.5 * s));
    const ComplexEval b = trigamma(ComplexPoint(0.5 * (1.0 - s)));
    RealEval out;
    out.value = -0.125 * (a.value.real() - b.value.real());
    out.abs_error = 0.125 * (a.abs_error + b.abs_error);
    return out;
}

RealEval alpha_partial_y(ComplexPoint sp) {
    const cplx s = sp;
    const ComplexEval a = trigamma(ComplexPoint(0.5 * s));
    const ComplexEval b = trigamma(ComplexPoint(0.5 * (1.0 - s)));
    RealEval out;
    out.value = 0.125 * (a.value.imag() - b.value.imag());
    out.abs_error = 0.125 * (a.abs_error + b.abs_error);
    return out;
}

RealEval omega(ComplexPoint sp, const Zero& q, const ZeroTable& table, std::size_t N) {
    const cplx s = sp;
    const ComplexEval ps = digamma(ComplexPoint(0.5 * s));
    const ComplexEval ip = I_P_excl(sp, q, table, N);
    RealEval out;
    out.value = 0.5 * kC.ln_pi - 0.5 * ps.value.real() + ip.value.real();
    out.abs_error = 0.5 * ps.abs_error + ip.abs_error;
    out.terms_used = N;
    out.converged = ip.converged;
    return out;
}

RealEval g(double x, double y) {
    const ComplexEval a = log_deriv({x, y});
    const ComplexEval b = log_deriv({1.0 - x, -y});
    RealEval out;
    const double ra = a.value.real();
    const double rb = b.value.real();
    out.value = ra * rb;
    out.abs_error = std::abs(ra) * b.abs_error + std::abs(rb) * a.abs_error + a.abs_error * b.abs_error;
    out.converged = a.converged && b.converged;
    return out;
}

RealEval balance_F(ComplexPoint sp) {
    const cplx s = sp;
    const ComplexEval a = log_deriv(s);
    const ComplexEval b = log_deriv(1.0 - s);
    RealEval out;
    out.value = a.value.real() - b.value.real();
    out.abs_error = a.abs_error + b.abs_error;
    out.converged = a.converged && b.converged;
    return out;
}

ProbeConfig make_probe_config(const Zero& q, const ZeroTable& table, double R, std::vector<double> radii,
                              std::size_t zero_budget, double tol_root) {
    if (!(tol_root > 0.0)) throw PreconditionError("ProbeConfig: tol_root must be positive");
    if (zero_budget > table.count()) throw PreconditionError("ProbeConfig: zero budget exceeds table");
    for (double r : radii)
        if (!(r > 0.0) || r > R) throw PreconditionError("ProbeConfig: every radius must lie in (0, R]");
    StripRegion region(q.rho(), R, table);
    ProbeConfig cfg;
    cfg.q = q;
    cfg.table = &table;
    cfg.R = region.R();
    cfg.radii = std::move(radii);
    cfg.zero_budget = zero_budget;
    cfg.tol_root = tol_root;
    return cfg;
}

ProbeResult find_m_r(const ProbeConfig& cfg, double r) {
    if (!(r > 0.0) || r > cfg.R) throw PreconditionError("find_m_r: radius outside (0, R]");
    const cplx q = cfg.q.rho();
    auto point = [&](double th) { return q + std::polar(r, th); };
    auto F = [&](double th) { return balance_F(ComplexPoint(point(th))).value; };

    std::vector<double> th(kProbeSamples);
    std::vector<double> fv(kProbeSamples, std::numeric_limits<double>::quiet_NaN());
    bool any = false;
    for (std::size_t j = 0; j < kProbeSamples; ++j) {
        th[j] = kPi + (static_cast<double>(j) + 0.5) * kPi / static_cast<double>(kProbeSamples);
        try {
            fv[j] = F(th[j]);
            any = true;
        } catch (const NearZeroError&) {
        } catch (const ConditioningError&) {
        }
    }
    if (!any) throw ConditioningError("find_m_r: no sample on the semicircle could be evaluated");

    // Sign changes between consecutive evaluable samples; keep the one nearest 3pi/2.
    double best_a = 0.0, best_b = 0.0, best_fa = 0.0, best_fb = 0.0;
    double best_dist = std::numeric_limits<double>::infinity();
    std::size_t prev = kProbeSamples;
    for (std::size_t j = 0; j < kProbeSamples; ++j) {
        if (std::isnan(fv[j])) continue;
        if (fv[j] == 0.0) {
            const double d = std::abs(th[j] - 1.5 * kPi);
            if (d < best_dist) {
                best_dist = d;
                best_a = best_b = th[j];
                best_fa = best_fb = 0.0;
            }
        } else if (prev < kProbeSamples && fv[prev] * fv[j] < 0.0) {
            const double d = std::abs(0.5 * (th[prev] + th[j]) - 1.5 * kPi);
            if (d < best_dist) {
                best_dist = d;
                best_a = th[prev];
                best_b = th[j];
                best_fa = fv[prev];
                best_fb = fv[j];
            }
        }
        prev = j;
    }
    if (!std::isfinite(best_dist)) throw NotFoundError("find_m_r: no sign change of F on the lower semicircle");

    double a = best_a, b = best_b, fa = best_fa;
    double theta = a;
    double ftheta = best_fa;
    if (a != b) {
        // Bisect until the bracket cannot shrink further in binary64.
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            const double fm = F(mid);
            if (fm == 0.0) {
                a = b = mid;
                fa = 0.0;
                break;
            }
            if ((fm < 0.0) == (fa < 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        const double fb = (a == b) ? fa : F(b);
        theta = std::abs(fa) <= std::abs(fb) ? a : b;
        ftheta = std::abs(fa) <= std::abs(fb) ? fa : fb;
    }
    (void)best_fb;

    ProbeResult res;
    res.r = r;
    res.theta = theta;
    res.m = ComplexPoint(point(theta));
    res.residual = std::abs(ftheta);
    res.found = true;
    res.beta_tan = (res.m.re() - cfg.q.sigma) / (cfg.q.t - res.m.im());
    res.beta_floor = 8.0 * kEps * (std::abs(q) + 1.0) / r;
    return res;
}

ProbeResult probe(const ProbeConfig& cfg, double r) {
    try {
        return find_m_r(cfg, r);
    } catch (const NotFoundError&) {
        ProbeResult res;
        res.r = r;
        res.found = false;
        return res;
    }
}

Report beta_scaling_fit(const ProbeConfig& cfg) {
    std::vector<double> radii = cfg.radii;
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    if (radii.size() < 4 || radii.back() < 9.999 * radii.front())
        throw InsufficientDataError("beta_scaling_fit: need >= 4 distinct radii spanning a decade");

    std::vector<double> lx, ly;
    std::size_t found = 0;
    std::ostringstream beta_list;
    for (double r : radii) {
        const ProbeResult p = probe(cfg, r);
        if (!p.found) continue;
        ++found;
        beta_list << " r=" << r << ":" << p.beta_tan;
        if (std::abs(p.beta_tan) > p.beta_floor) {
            lx.push_back(std::log(r));
            ly.push_back(std::log(std::abs(p.beta_tan)));
        }
    }
    if (found < 4) throw InsufficientDataError("beta_scaling_fit: fewer than 4 probes found");
    if (lx.size() < 4)
        throw InsufficientDataError("beta_scaling_fit: only " + std::to_string(lx.size()) + " of " +
                                    std::to_string(found) +
                                    " tan(beta) values exceed the rounding floor, slope undefined;" +
                                    beta_list.str());

    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    const double slope = sxy / sxx;
    Report rep;
    rep.claim_id = "beta_scaling_fit";
    rep.measured = {slope, n};
    rep.tolerance = 0.2;
    rep.passed = slope >= 0.8 && slope <= 1.2;
    rep.notes = "tan(beta) by radius:" + beta_list.str();
    return rep;
}

Report re_midl_check(const ProbeConfig& cfg, double r) {
    Report rep;
    rep.claim_id = "re_midl";
    const ProbeResult p = probe(cfg, r);
    if (!p.found) {
        rep.passed = false;
        rep.notes = "no m_r";
        return rep;
    }
    const ComplexEval l = log_deriv(p.m);
    const RealEval a = alpha(p.m);
    const double d = std::abs(l.value.real() - a.value);
    rep.measured = {d, l.value.real(), a.value};
    rep.tolerance = 1e-6 + l.abs_error + a.abs_error;
    rep.passed = d <= rep.tolerance;
    return rep;
}

RealEval estimate_H1(const ProbeConfig& cfg) {
    constexpr std::size_t kSamples = 512;
    const cplx q = cfg.q.rho();
    const double k = cfg.q.multiplicity;
    RealEval out;
    double worst = 0.0;
    double err = 0.0;
    for (std::size_t j = 0; j < kSamples; ++j) {
        const cplx s = q + std::polar(cfg.R, 2.0 * kPi * static_cast<double>(j) / kSamples);
        const RealEval f = balance_F(ComplexPoint(s));
        const double v = std::abs(f.value - (2.0 * k / (s - q)).real());
        if (v > worst) {
            worst = v;
            err = f.abs_error;
        }
    }
    out.value = worst;
    out.abs_error = err;
    out.terms_used = kSamples;
    return out;
}

Report arc_response(const ProbeConfig& cfg, double r, std::vector<double> tau_values) {
    for (double tau : tau_values)
        if (!(std::abs(tau) < r)) throw PreconditionError("arc_response: every tau must satisfy |tau| < r");
    if (cfg.table == nullptr) throw PreconditionError("arc_response: config has no zero table");
    Report rep;
    rep.claim_id = "arc_response";
    const ProbeResult p = probe(cfg, r);
    if (!p.found) {
        rep.notes = "no m_r";
        return rep;
    }
    std::sort(tau_values.begin(), tau_values.end());
    const Zero& q = cfg.q;
    const double k = q.multiplicity;
    const double om = omega(p.m, q, *cfg.table, cfg.zero_budget).value;
    std::vector<double> vals;
    vals.reserve(tau_values.size());
    for (double tau : tau_values) {
        const double x = q.sigma + tau;
        const double y = q.t - std::sqrt(r * r - tau * tau);
        vals.push_back(k * (x - p.m.re()) / (r * r) - om +
                       omega(ComplexPoint(x, y), q, *cfg.table, cfg.zero_budget).value);
    }
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < vals.size(); ++i) min_step = std::min(min_step, vals[i] - vals[i - 1]);
    rep.measured.push_back(min_step);
    rep.measured.insert(rep.measured.end(), vals.begin(), vals.end());
    rep.tolerance = 0.0;
    rep.passed = vals.size() >= 2 && min_step > 0.0;
    return rep;
}

RealEval g_arc_derivative(const ProbeConfig& cfg, double r, double step) {
    const double h = step > 0.0 ? step : std::min(1e-5, r / 100.0);
    if (h >= r) throw PreconditionError("g_arc_derivative: step must be smaller than r");
    const ProbeResult p = find_m_r(cfg, r);
    const double xm = p.m.re();
    const Zero& q = cfg.q;
    if (std::abs(xm + h - q.sigma) >= r || std::abs(xm - h - q.sigma) >= r)
        throw PreconditionError("g_arc_derivative: x_m +- step leaves the arc");
    const RealEval gp = g(xm + h, arc_y(q, r, xm + h));
    const RealEval gm = g(xm - h, arc_y(q, r, xm - h));
    RealEval out;
    out.value = (gp.value - gm.value) / (2.0 * h);
    out.abs_error = (gp.abs_error + gm.abs_error + kEps * (std::abs(gp.value) + std::abs(gm.value))) / (2.0 * h);
    out.converged = gp.converged && gm.converged;
    return out;
}

Report lemma2_check(ComplexPoint qp) {
    const cplx q = qp;
    const ComplexEval a = trigamma(ComplexPoint(0.5 * q));
    const ComplexEval b = trigamma(ComplexPoint(0.5 * (1.0 - q)));
    const double diff = a.value.real() - b.value.real();
    Report rep;
    rep.claim_id = "lemma2";
    rep.measured = {std::abs(diff), diff};
    rep.tolerance = 1e-10;
    rep.passed = std::abs(diff) <= rep.tolerance;
    if (qp.re() != 0.5 && qp.re() > 0.0 && qp.re() <= 0.5 && std::abs(qp.im()) >= 4.0) {
        const double G = lemma3_G(qp.re(), std::abs(qp.im())).value;
        rep.measured.push_back(4.0 * (1.0 - 2.0 * qp.re()) * G);
        rep.notes = "off-line point; 4(1-2x)G appended";
    }
    return rep;
}

Report lemma2_check(const Zero& q) { return lemma2_check(ComplexPoint(q.rho())); }

RealEval lemma3_S(double x, double y) {
    check_lemma3_domain(x, y, "lemma3_S");
    const std::size_t n_cut = lemma3_terms(y);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t n = 0; n < n_cut; ++n) {
        const double f = s_summand(x, y, static_cast<double>(n));
        sum += f;
        mag += std::abs(f);
    }
    // int_A^inf of the summand: (1/2)[a/(a^2+y^2) - b/(b^2+y^2)] at a = 2A+x, b = 2A+1-x.
    const double A = static_cast<double>(n_cut) - 0.5;
    const double a = 2.0 * A + x;
    const double b = 2.0 * A + 1.0 - x;
    const double tail = 0.5 * (a / (a * a + y * y) - b / (b * b + y * y));
    const double fprime = s_summand(x, y, static_cast<double>(n_cut)) -
                          s_summand(x, y, static_cast<double>(n_cut - 1));
    RealEval out;
    out.value = sum + tail + fprime / 24.0;
    out.abs_error = std::abs(fprime) * 8.0 / (24.0 * static_cast<double>(n_cut)) + 4.0 * kEps * mag;
    out.terms_used = n_cut;
    return out;
}

RealEval lemma3_G(double x, double y) {
    check_lemma3_domain(x, y, "lemma3_G");
    const std::size_t n_cut = lemma3_terms(y);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t n = 0; n < n_cut; ++n) {
        const double f = g_summand(x, y, static_cast<double>(n));
        sum += f;
        mag += std::abs(f);
    }
    const double A = static_cast<double>(n_cut) - 0.5;
    const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double u) { return g_summand(x, y, u); }, A, std::numeric_limits<double>::infinity(), 15, 1e-14);
    const double fprime = g_summand(x, y, static_cast<double>(n_cut)) -
                          g_summand(x, y, static_cast<double>(n_cut - 1));
    RealEval out;
    out.value = sum + tail + fprime / 24.0;
    out.abs_error = std::abs(fprime) * 8.0 / (24.0 * static_cast<double>(n_cut)) + 4.0 * kEps * mag;
    out.terms_used = n_cut;
    return out;
}

RealEval lemma3_positive_part_bound(double y) {
    if (!(y >= 4.0) || !std::isfinite(y)) throw DomainError("lemma3_positive_part_bound: requires y >= 4");
    const double h = 0.5 * kPi * y;
    const double ch = std::cosh(h);
    const double sh = std::sinh(h);
    const double th = std::tanh(h);
    const double c = kPi * kPi / 8.0;
    RealEval out;
    out.value = c * y * y / (ch * ch) + c * y * y / (sh * sh) + kPi / (4.0 * y) * th + 1.0 / (y * y) +
                c / (y * ch * ch) * (1.5 / y + 0.5 * kPi * th);
    out.abs_error = 16.0 * kEps * out.value;
    return out;
}

Report alpha_negativity_scan(const std::vector<double>& sigma_grid, const std::vector<double>& t_grid,
                             int parallelism) {
    for (double sg : sigma_grid)
        if (!(sg > 0.0 && sg <= 0.5)) throw PreconditionError("alpha_negativity_scan: sigma outside (0, 1/2]");
    for (double t : t_grid)
        if (!(t >= 8.0) || !std::isfinite(t)) throw PreconditionError("alpha_negativity_scan: t below 8");
    const std::size_t nt = t_grid.size();
    const std::size_t total = sigma_grid.size() * nt;
    const auto vals = parallel_map<RealEval>(total, parallelism, [&](std::size_t i) {
        return alpha_series(sigma_grid[i / nt], t_grid[i % nt]);
    });
    Report rep;
    rep.claim_id = "alpha_negativity";
    rep.tolerance = 0.0;
    if (total == 0) {
        rep.inconclusive = true;
        rep.notes = "empty grid";
        return rep;
    }
    std::size_t worst = 0;
    bool all_neg = true;
    bool all_conv = true;
    for (std::size_t i = 0; i < total; ++i) {
        if (vals[i].value > vals[worst].value) worst = i;
        if (!(vals[i].value + vals[i].abs_error < 0.0)) all_neg = false;
        if (!vals[i].converged) all_conv = false;
    }
    rep.measured = {vals[worst].value, sigma_grid[worst / nt], t_grid[worst % nt]};
    rep.passed = all_neg && all_conv;
    rep.inconclusive = all_neg && !all_conv;
    return rep;
}

}  // namespace zetalab
