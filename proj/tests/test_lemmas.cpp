#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "zetalab/claims.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/lemmas.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

const ZeroTable& table() {
    static const ZeroTable t = load_zero_table(std::string(ZETALAB_DATA_DIR) + "/zeros_10000.txt");
    return t;
}

ProbeConfig cfg_for(std::size_t i, std::vector<double> radii = {0.4, 0.2, 0.1, 0.05}) {
    return make_probe_config(table()[i], table(), 0.5, std::move(radii), table().count());
}

// Direct sum of the Lemma 3 series S, 2e6 terms, midpoint integral for the rest.
double s_brute(double x, double y) {
    double s = 0.0;
    const long N = 2000000;
    for (long n = N - 1; n >= 0; --n) {
        const double a = 2.0 * n + x, b = 2.0 * n + 1 - x;
        s += (a * a - y * y) / ((a * a + y * y) * (a * a + y * y)) - (b * b - y * y) / ((b * b + y * y) * (b * b + y * y));
    }
    const double A = N - 0.5;
    const double a = 2 * A + x, b = 2 * A + 1 - x;
    return s + 0.5 * (a / (a * a + y * y) - b / (b * b + y * y));
}

}  // namespace

TEST(Alpha, Examples) {
    EXPECT_LT(alpha(ComplexPoint(0.5, 8)).value, 0.0);
    EXPECT_NEAR(alpha(ComplexPoint(0.5, 14.134725)).value, alpha_series(0.5, 14.134725).value, 1e-8);
    EXPECT_NEAR(alpha_series(0.3, 12).value, alpha(ComplexPoint(0.3, 12)).value, 1e-8);
    EXPECT_LT(alpha_series(0.5, 8).value, 0.0);
    EXPECT_NEAR(alpha_series(0.3, 12).value, alpha_series(0.7, 12).value, 1e-12);
    EXPECT_THROW(alpha_series(1.0, 5), DomainError);
    EXPECT_THROW(alpha_series(0.5, 0), DomainError);
}

TEST(Alpha, SymmetryProperty) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ux(0.01, 0.99), uy(0.5, 100.0);
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng), y = uy(rng);
        ASSERT_NEAR(alpha(ComplexPoint(x, y)).value, alpha(ComplexPoint(1 - x, y)).value, 1e-12);
    }
}

TEST(Alpha, SeriesAgreesWithDigammaOnGrid) {
    for (double x : linspace(0.05, 0.95, 10))
        for (double y : linspace(1.0, 100.0, 10))
            ASSERT_NEAR(alpha_series(x, y).value, alpha(ComplexPoint(x, y)).value, 1e-8) << x << " " << y;
}

TEST(Alpha, ShortSeriesIsNotConverged) {
    EXPECT_FALSE(alpha_series(0.3, 50, 10).converged);
    EXPECT_TRUE(alpha_series(0.3, 50).converged);
}

TEST(AlphaPartials, Examples) {
    EXPECT_NEAR(alpha_partial_x(ComplexPoint(0.5, 20)).value, 0.0, 1e-11);
    EXPECT_LT(alpha_partial_y(ComplexPoint(0.3, 10)).value, 0.0);
}

TEST(AlphaPartials, FiniteDifferenceProperty) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ux(0.05, 0.45), uy(2.0, 60.0);
    std::vector<std::pair<double, double>> pts = {{0.3, 10.0}};
    for (int i = 0; i < 50; ++i) pts.emplace_back(ux(rng), uy(rng));
    const double h = 1e-5;
    for (auto [x, y] : pts) {
        const double fx = (alpha(ComplexPoint(x + h, y)).value - alpha(ComplexPoint(x - h, y)).value) / (2 * h);
        const double fy = (alpha(ComplexPoint(x, y + h)).value - alpha(ComplexPoint(x, y - h)).value) / (2 * h);
        const double ax = alpha_partial_x(ComplexPoint(x, y)).value;
        const double ay = alpha_partial_y(ComplexPoint(x, y)).value;
        ASSERT_LT(std::abs(ax - fx), 1e-5 * std::abs(ax)) << x << " " << y;
        ASSERT_LT(std::abs(ay - fy), 1e-5 * std::abs(ay)) << x << " " << y;
    }
}

TEST(AlphaPartials, ConnectionToLemma3Series) {
    // d_x alpha = -(1/8) Re[psi'(s/2) - psi'((1-s)/2)] = -S(x, y) / 2.
    for (double x : {0.05, 0.2, 0.35, 0.5})
        for (double y : {4.0, 9.0, 20.0, 50.0})
            ASSERT_NEAR(alpha_partial_x(ComplexPoint(x, y)).value, -0.5 * lemma3_S(x, y).value, 1e-9) << x << " " << y;
}

TEST(CriticalLine, Degeneracy) {
    for (double y = 8; y <= 60; y += 4) {
        EXPECT_NEAR(balance_F(ComplexPoint(0.5, y)).value, 0.0, 1e-10);
        EXPECT_NEAR(alpha_partial_x(ComplexPoint(0.5, y)).value, 0.0, 1e-10);
    }
}

TEST(Omega, FiniteAtZeroAndReexpression) {
    const Zero& q = table()[0];
    const double at_q = omega(ComplexPoint(q.rho()), q, table(), 10000).value;
    EXPECT_TRUE(std::isfinite(at_q));
    EXPECT_LT(std::abs(at_q), 1e3);
    for (int j = 0; j < 16; ++j) {
        const cplx s = q.rho() + std::polar(0.1, 2 * M_PI * j / 16);
        const double lhs = zeta_log_deriv(ComplexPoint(s)).value.real();
        const RealEval we = omega(ComplexPoint(s), q, table(), 10000);
        const double w = we.value;
        // The excluded orbit of an on-line zero is {q, conj q}; the gap is the truncated zero sum.
        EXPECT_NEAR(w + (1.0 / (s - q.rho())).real() + (1.0 / (s - std::conj(q.rho()))).real(), lhs,
                    we.abs_error + 1e-9);
        EXPECT_NEAR(w + (1.0 / (s - q.rho())).real() + (1.0 / (s - std::conj(q.rho()))).real(), lhs, 1e-4);
        EXPECT_NEAR(w + (1.0 / (s - q.rho())).real(), lhs, 1e-3);
    }
}

TEST(Omega, SmoothAtZero) {
    const Zero& q = table()[0];
    auto d = [&](double h) {
        return (omega(ComplexPoint(q.sigma + h, q.t), q, table(), 10000).value -
                omega(ComplexPoint(q.sigma - h, q.t), q, table(), 10000).value) /
               (2 * h);
    };
    EXPECT_NEAR(d(1e-5), d(1e-3), 1e-4);
}

TEST(GFunction, Properties) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ux(0.05, 0.95), uy(5.0, 60.0);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng), y = uy(rng);
        ASSERT_NEAR(g(x, y).value, g(1 - x, y).value, 1e-12 * (1 + std::abs(g(x, y).value)));
    }
    const double l = zeta_log_deriv(ComplexPoint(0.5, 30)).value.real();
    EXPECT_NEAR(g(0.5, 30).value, l * l, 1e-12);
    EXPECT_GE(g(0.5, 30).value, 0.0);
}

TEST(BalanceF, Properties) {
    const ComplexPoint s(0.3, 17);
    EXPECT_NEAR(balance_F(ComplexPoint(1.0 - cplx(s))).value, -balance_F(s).value, 1e-10);
    const Zero& q = table()[0];
    bool neg = false, pos = false;
    for (int j = 0; j < 32; ++j) {
        const double th = M_PI + (j + 0.5) * M_PI / 32;
        const double f = balance_F(ComplexPoint(q.rho() + std::polar(0.1, th))).value;
        neg |= f < 0;
        pos |= f > 0;
    }
    EXPECT_TRUE(neg && pos);
}

TEST(FindMr, Examples) {
    const ProbeConfig cfg = cfg_for(0);
    const ProbeResult a = find_m_r(cfg, 0.2);
    EXPECT_TRUE(a.found);
    EXPECT_LE(a.residual, 1e-9);
    const ProbeResult b = find_m_r(cfg, 0.05);
    EXPECT_LE(std::abs(b.beta_tan), std::max(std::abs(a.beta_tan), b.beta_floor));
    EXPECT_THROW(find_m_r(cfg, 0.6), PreconditionError);
    EXPECT_THROW(make_probe_config(table()[0], table(), 0.5, {0.7}, 10), PreconditionError);
}

TEST(FindMr, FirstTenZerosProperty) {
    for (std::size_t i = 0; i < 10; ++i) {
        const ProbeConfig cfg = cfg_for(i);
        for (double r : cfg.radii) {
            const ProbeResult p = find_m_r(cfg, r);
            const cplx q = table()[i].rho();
            ASSERT_NEAR(std::abs(cplx(p.m) - q), r, 1e-12);
            ASSERT_LE(p.m.im(), q.imag());
            ASSERT_LE(p.residual, 1e-9);
            ASSERT_TRUE(re_midl_check(cfg, r).passed);
        }
    }
}

TEST(BetaFit, DegenerateInputs) {
    EXPECT_THROW(beta_scaling_fit(cfg_for(0, {0.1, 0.1, 0.1, 0.1})), InsufficientDataError);
    EXPECT_THROW(beta_scaling_fit(cfg_for(0, {0.4, 0.2, 0.1, 0.05})), InsufficientDataError);
}

TEST(BetaFit, CriticalLineTangentIsBelowRoundingFloor) {
    // m_r sits at the circle bottom, so tan(beta) is zero to rounding and the slope is undefined.
    const ProbeConfig cfg = cfg_for(0, {0.4, 0.2, 0.1, 0.05, 0.025});
    for (double r : cfg.radii) {
        const ProbeResult p = find_m_r(cfg, r);
        EXPECT_LE(std::abs(p.beta_tan), p.beta_floor);
    }
    try {
        beta_scaling_fit(cfg);
        FAIL();
    } catch (const InsufficientDataError& e) {
        EXPECT_NE(std::string(e.what()).find("slope undefined"), std::string::npos);
    }
}

TEST(ReMidl, ExamplesAndUnfoundProbe) {
    EXPECT_TRUE(re_midl_check(cfg_for(0), 0.1).passed);
    EXPECT_TRUE(re_midl_check(cfg_for(2), 0.2).passed);
    // A hypothetical point off the line with no sign change of F at this radius.
    const ProbeConfig off = make_probe_config(Zero(19.5, 0.3), table(), 0.5, {0.05}, 100);
    EXPECT_FALSE(probe(off, 0.05).found);
    EXPECT_THROW(find_m_r(off, 0.05), NotFoundError);
    const Report r = re_midl_check(off, 0.05);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.notes, "no m_r");
}

TEST(H1, EstimateAndExistenceRadius) {
    const ProbeConfig cfg = cfg_for(0);
    const RealEval h = estimate_H1(cfg);
    EXPECT_GT(h.value, 0.0);
    EXPECT_TRUE(std::isfinite(h.value));
    const double r = std::min(0.4, 0.9 * 2.0 / h.value);
    EXPECT_TRUE(probe(cfg, r).found);
}

TEST(ArcResponse, StrictlyIncreasing) {
    std::vector<double> taus;
    const double r = 0.05;
    for (int j = 1; j <= 33; ++j) taus.push_back(-r / 2 + r * j / 34.0);
    for (std::size_t i = 0; i < 3; ++i) {
        const Report rep = arc_response(cfg_for(i), r, taus);
        EXPECT_TRUE(rep.passed) << i;
        EXPECT_GT(rep.measured.at(0), 0.0);
    }
    const Report mid = arc_response(cfg_for(0), r, {0.0});
    EXPECT_TRUE(std::isfinite(mid.measured.at(1)));
    EXPECT_THROW(arc_response(cfg_for(0), r, {0.06}), PreconditionError);
}

TEST(GArcDerivative, TrendsToZeroLimit) {
    const ProbeConfig cfg = cfg_for(0);
    for (double r : {0.2, 0.1, 0.05}) {
        const RealEval v = g_arc_derivative(cfg, r);
        EXPECT_LE(std::abs(v.value), v.abs_error) << r;
    }
    EXPECT_THROW(g_arc_derivative(cfg, 0.05, 0.06), PreconditionError);
}

TEST(GFunction, AtBalancePointEqualsAlphaSquared) {
    const ProbeConfig cfg = cfg_for(0);
    const ProbeResult p = find_m_r(cfg, 0.1);
    const double a = alpha(p.m).value;
    EXPECT_NEAR(g(p.m.re(), p.m.im()).value, a * a, 2e-6);
}

TEST(Lemma2, Examples) {
    EXPECT_LE(lemma2_check(ComplexPoint(0.5, 14.134725)).measured[0], 1e-11);
    EXPECT_LE(lemma2_check(ComplexPoint(0.5, 21.022040)).measured[0], 1e-11);
    const Report off = lemma2_check(ComplexPoint(0.4, 14.134725));
    EXPECT_FALSE(off.passed);
    EXPECT_GT(off.measured[0], 1e-4);
    ASSERT_EQ(off.measured.size(), 3u);
    EXPECT_NEAR(off.measured[1], off.measured[2], 1e-12);
}

TEST(Lemma3, Examples) {
    for (double y : {4.0, 10.0, 50.0}) EXPECT_NEAR(lemma3_S(0.5, y).value, 0.0, 1e-12);
    EXPECT_NEAR(lemma3_S(0.3, 4).value, 0.4 * lemma3_G(0.3, 4).value, 1e-10);
    for (int i = 1; i <= 10; ++i) EXPECT_LT(lemma3_G(0.05 * i, 4).value, 0.0);
    EXPECT_THROW(lemma3_S(0.6, 5), DomainError);
    EXPECT_THROW(lemma3_G(0.3, 3.9), DomainError);
}

TEST(Lemma3, MatchesBruteForceSeries) {
    for (auto [x, y] : {std::pair{0.1, 4.0}, std::pair{0.3, 12.0}, std::pair{0.45, 40.0}})
        EXPECT_NEAR(lemma3_S(x, y).value, s_brute(x, y), 1e-12) << x << " " << y;
}

TEST(Lemma3, GridProperty) {
    for (int i = 1; i <= 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double x = 0.025 * i, y = 4 + 46.0 * j / 19;
            const RealEval G = lemma3_G(x, y);
            ASSERT_LT(G.value + G.abs_error, 0.0);
            ASSERT_NEAR(lemma3_S(x, y).value, (1 - 2 * x) * G.value, 1e-10);
        }
}

TEST(Lemma3, PositivePartBound) {
    const double p4 = lemma3_positive_part_bound(4).value;
    EXPECT_LT(p4, 0.2594088);
    EXPECT_NEAR(p4, 0.2594072418, 1e-9);
    const double ch = std::cosh(2 * M_PI), sh = std::sinh(2 * M_PI);
    EXPECT_LT(M_PI * M_PI / 8 * 16 / (ch * ch), 0.0002754);
    EXPECT_LT(M_PI * M_PI / 8 * 16 / (sh * sh), 0.0002754 + 1e-8);
    EXPECT_LT(lemma3_positive_part_bound(8).value, p4);
    EXPECT_THROW(lemma3_positive_part_bound(3), DomainError);
}

TEST(AlphaScan, NegativeOnGrid) {
    std::vector<double> sig, ts;
    for (int i = 1; i <= 10; ++i) sig.push_back(0.05 * i);
    for (int t = 8; t <= 60; t += 2) ts.push_back(t);
    const Report r = alpha_negativity_scan(sig, ts, 2);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.measured[0], 0.0);
    EXPECT_EQ(r.measured[1], 0.5);
    EXPECT_EQ(r.measured[2], 8.0);
    EXPECT_THROW(alpha_negativity_scan({0.6}, {10}), PreconditionError);
    EXPECT_THROW(alpha_negativity_scan({0.3}, {7}), PreconditionError);
}

TEST(AlphaScan, ChainConstants) {
    const Constants c = Constants::standard();
    EXPECT_NEAR(c.ln_pi, 1.1447299, 5e-8);
    EXPECT_NEAR(c.euler_gamma, 0.5772157, 5e-8);
    double partial = 0;
    for (int n = 1; n <= 9; ++n) partial += 16.0 / (n * (n * n + 16.0));
    EXPECT_GT(partial, 1.8873330);
    EXPECT_LT(c.ln_pi + c.euler_gamma + 1.0 / 64 + 0.375 * sum_inv_n2_y2(4).value, 1.8731141);
}
