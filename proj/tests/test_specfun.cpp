#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "zetalab/errors.hpp"
#include "zetalab/specfun.hpp"

using namespace zetalab;

namespace {

// Weierstrass product: log Gamma(z) = -gamma z - log z + sum_k [z/k - log(1 + z/k)],
// with the k > M tail expanded to fourth order in z/k.
cplx log_gamma_product(cplx z, long M) {
    const double g = 0.57721566490153286061;
    cplx sum = 0.0;
    for (long k = M; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        sum += z / kd - std::log(1.0 + z / kd);
    }
    const double m = static_cast<double>(M);
    const double s2 = 1.0 / m - 0.5 / (m * m) + 1.0 / (6.0 * m * m * m);
    const double s3 = 0.5 / (m * m) - 0.5 / (m * m * m);
    const double s4 = 1.0 / (3.0 * m * m * m);
    sum += z * z / 2.0 * s2 - z * z * z / 3.0 * s3 + z * z * z * z / 4.0 * s4;
    return -g * z - std::log(z) + sum;
}

// psi(z) = -gamma + sum_{n<N} (1/(n+1) - 1/(n+z)) + midpoint integral of the rest.
cplx digamma_series(cplx z, long N) {
    const double g = 0.57721566490153286061;
    cplx sum = 0.0;
    for (long n = N - 1; n >= 0; --n) {
        const double nd = static_cast<double>(n);
        sum += 1.0 / (nd + 1.0) - 1.0 / (nd + z);
    }
    const double a = static_cast<double>(N) - 0.5;
    return -g + sum + std::log((a + z) / (a + 1.0));
}

double brute_sum(double y, long N, long step, long offset) {
    // sum over m = step*n - offset, n = 1..N, of 1/(m^2 + y^2), plus the integral tail.
    double s = 0.0;
    for (long n = N; n >= 1; --n) {
        const double m = static_cast<double>(step * n - offset);
        s += 1.0 / (m * m + y * y);
    }
    const double A = static_cast<double>(step) * (static_cast<double>(N) + 0.5) - static_cast<double>(offset);
    s += (0.5 * M_PI - std::atan(A / y)) / (y * static_cast<double>(step));
    return s;
}

}  // namespace

TEST(LogGamma, ClassicalValues) {
    EXPECT_NEAR(std::abs(log_gamma(ComplexPoint(1, 0)).value), 0.0, 1e-14);
    EXPECT_NEAR(log_gamma(ComplexPoint(0.5, 0)).value.real(), 0.5 * std::log(M_PI), 1e-14);
    EXPECT_NEAR(log_gamma(ComplexPoint(6, 0)).value.real(), std::log(120.0), 1e-13);
}

TEST(LogGamma, MatchesProductOracle) {
    for (cplx z : {cplx(0.25, 7.067), cplx(0.1, 0.3), cplx(1.7, -12.0), cplx(0.5, 60.0)}) {
        const cplx oracle = log_gamma_product(z, 2000000);
        const ComplexEval e = log_gamma(ComplexPoint(z));
        EXPECT_LT(std::abs(e.value - oracle), 1e-9) << z;
        EXPECT_LE(e.abs_error, 1e-12);
    }
}

TEST(LogGamma, PoleAndDomainErrors) {
    EXPECT_THROW(log_gamma(ComplexPoint(0, 0)), PoleError);
    EXPECT_THROW(log_gamma(ComplexPoint(-3, 0)), PoleError);
    EXPECT_THROW(ComplexPoint(NAN, 0), DomainError);
}

TEST(Digamma, ClassicalValues) {
    const Constants c = Constants::standard();
    EXPECT_NEAR(digamma(ComplexPoint(1, 0)).value.real(), -c.euler_gamma, 1e-14);
    EXPECT_NEAR(digamma(ComplexPoint(0.5, 0)).value.real(), -c.euler_gamma - 2 * std::log(2.0), 1e-14);
    EXPECT_THROW(digamma(ComplexPoint(-1, 0)), PoleError);
}

TEST(Digamma, MatchesMillionTermSeries) {
    const cplx z(0.25, 4.0);
    const cplx oracle = digamma_series(z, 1000000);
    const ComplexEval e = digamma(ComplexPoint(z));
    EXPECT_LT(std::abs(e.value - oracle), 1e-11);
    EXPECT_LE(e.abs_error, 1e-11);
}

TEST(Digamma, RecurrenceProperty) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(-200.0, 200.0);
    for (int i = 0; i < 1000; ++i) {
        const cplx z(ux(rng), uy(rng));
        if (std::abs(z.imag()) < 0.1) continue;
        const cplx d = digamma(ComplexPoint(z + 1.0)).value - digamma(ComplexPoint(z)).value - 1.0 / z;
        ASSERT_LT(std::abs(d), 1e-10) << z;
    }
}

TEST(Digamma, ReflectionProperty) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ux(-1.5, 2.0), uy(-40.0, 40.0);
    for (int i = 0; i < 500; ++i) {
        const cplx z(ux(rng), uy(rng));
        if (std::abs(z.imag()) < 0.05) continue;
        const cplx d = digamma(ComplexPoint(1.0 - z)).value - digamma(ComplexPoint(z)).value -
                       M_PI / std::tan(M_PI * z);
        ASSERT_LT(std::abs(d), 1e-9) << z;
    }
}

TEST(Digamma, ConjugateSymmetryProperty) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(-200.0, 200.0);
    for (int i = 0; i < 500; ++i) {
        const cplx z(ux(rng), uy(rng));
        if (std::abs(z.imag()) < 0.05) continue;
        const cplx a = digamma(ComplexPoint(std::conj(z))).value;
        const cplx b = digamma(ComplexPoint(z)).value;
        ASSERT_LE(std::abs(a - std::conj(b)), 4 * kEps * std::abs(b)) << z;
        const cplx ta = trigamma(ComplexPoint(std::conj(z))).value;
        const cplx tb = trigamma(ComplexPoint(z)).value;
        ASSERT_LE(std::abs(ta - std::conj(tb)), 4 * kEps * std::abs(tb)) << z;
    }
}

TEST(Trigamma, ClassicalAndFiniteDifference) {
    EXPECT_NEAR(trigamma(ComplexPoint(1, 0)).value.real(), M_PI * M_PI / 6, 1e-13);
    const cplx z(0.3, 5.0);
    const double h = 1e-4;
    const cplx fd = (digamma(ComplexPoint(z + h)).value - digamma(ComplexPoint(z - h)).value) / (2 * h);
    EXPECT_LT(std::abs(trigamma(ComplexPoint(z)).value - fd), 1e-6);
}

TEST(Trigamma, FiniteDifferenceProperty) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> ux(0.05, 2.0), uy(-200.0, 200.0);
    for (int i = 0; i < 300; ++i) {
        const cplx z(ux(rng), uy(rng));
        const double h = 1e-4;
        const cplx t = trigamma(ComplexPoint(z)).value;
        const cplx fd = (digamma(ComplexPoint(z + h)).value - digamma(ComplexPoint(z - h)).value) / (2 * h);
        ASSERT_LT(std::abs(t - fd) / std::abs(t), 1e-5) << z;
    }
}

TEST(Trigamma, MatchesDirectSeries) {
    const cplx z(0.25, 3.0);
    cplx s = 0.0;
    const long N = 1000000;
    for (long n = N - 1; n >= 0; --n) s += 1.0 / ((static_cast<double>(n) + z) * (static_cast<double>(n) + z));
    s += 1.0 / (static_cast<double>(N) - 0.5 + z);
    EXPECT_LT(std::abs(trigamma(ComplexPoint(z)).value - s), 1e-10);
}

TEST(Constants, Identities) {
    const Constants c = Constants::standard();
    EXPECT_NEAR(c.a_const + c.rho_sum_const, 0.0, 1e-16);
    EXPECT_NEAR(c.rho_sum_const, 0.0230957, 5e-8);
    EXPECT_NEAR(c.ln_2sqrt_pi, std::log(2 * std::sqrt(M_PI)), 1e-15);
}

TEST(ClosedFormSums, PrintedValueAndBruteForce) {
    EXPECT_NEAR(sum_inv_n2_y2(4).value, 0.3614490, 1e-6);
    for (double y : {1.0, 4.0, 16.0}) {
        EXPECT_NEAR(sum_inv_n2_y2(y).value, brute_sum(y, 1000000, 1, 0), 1e-9) << y;
        EXPECT_NEAR(sum_inv_odd2_y2(y).value, brute_sum(y, 1000000, 2, 1), 1e-9) << y;
        EXPECT_NEAR(sum_inv_even2_y2(y).value, brute_sum(y, 1000000, 2, 0), 1e-9) << y;
    }
}

TEST(ClosedFormSums, PartitionAndReindexing) {
    for (double y : {2.0, 4.0, 8.0})
        EXPECT_NEAR(sum_inv_odd2_y2(y).value + sum_inv_even2_y2(y).value, sum_inv_n2_y2(y).value, 1e-12);
    EXPECT_NEAR(sum_inv_even2_y2(4).value, sum_inv_n2_y2(2).value / 4, 1e-12);
}

TEST(ClosedFormSums, Limits) {
    EXPECT_NEAR(sum_inv_odd2_y2(1e-4).value, M_PI * M_PI / 8, 1e-6);
    const double y = 1e4;
    EXPECT_NEAR(sum_inv_n2_y2(y).value, M_PI / (2 * y) - 1 / (2 * y * y), 1e-12);
    EXPECT_NEAR(sum_inv_even2_y2(y).value, M_PI / (4 * y) - 1 / (2 * y * y), 1e-10);
    EXPECT_THROW(sum_inv_n2_y2(0), DomainError);
    EXPECT_THROW(sum_inv_odd2_y2(-1), DomainError);
}
