#include "zetalab/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zetalab {
namespace {

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,      7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,    854513.0 / 138.0,  -236364091.0 / 2730.0,
};

// Asymptotic series use B_2..B_20; B_22 bounds the remainder.
constexpr int kAsymTerms = 10;
constexpr double kShiftModulus = 15.0;
constexpr double kLowestRe = -1.0e4;

void check_pole(cplx z, const char* who) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleError(std::string(who) + ": pole at nonpositive integer " +
                        std::to_string(z.real()));
    if (z.real() < kLowestRe)
        throw DomainError(std::string(who) + ": real part below supported range");
}

// Number of unit shifts that brings z to Re >= 1 and |z| >= kShiftModulus.
int shift_count(cplx z) {
    int m = 0;
    while (z.real() + m < 1.0 || std::abs(z + static_cast<double>(m)) < kShiftModulus) ++m;
    return m;
}

// sec^{2K+2}(arg(w)/2) factor of the Stirling remainder bound; arg(w) <= pi/2 after shifting.
double remainder_factor(cplx w) {
    const double c = std::cos(0.5 * std::arg(w));
    return std::pow(1.0 / c, 2 * kAsymTerms + 2);
}

// x coth x - 1 without cancellation for small x.
double xcoth_minus_one(double x) {
    if (x < 0.5) {
        // x coth x = sum_k 2^{2k} B_{2k} x^{2k} / (2k)!
        double sum = 0.0;
        double pow2x = 1.0;    // (2x)^{2k}
        double fact = 1.0;     // (2k)!
        for (int k = 1; k <= static_cast<int>(kBernoulli.size()); ++k) {
            pow2x *= 4.0 * x * x;
            fact *= static_cast<double>((2 * k - 1) * (2 * k));
            sum += kBernoulli[k - 1] * pow2x / fact;
        }
        return sum;
    }
    return x / std::tanh(x) - 1.0;
}

void check_positive(double y, const char* who) {
    if (!(y > 0.0) || !std::isfinite(y))
        throw DomainError(std::string(who) + ": requires finite y > 0");
}

}  // namespace

Constants Constants::standard() noexcept {
    Constants c{};
    c.euler_gamma = 0.57721566490153286060651209008240243;
    c.ln_pi = 1.14472988584940017414342735135305871;
    c.ln_2sqrt_pi = 0.69314718055994530941723212145817657 + 0.5 * c.ln_pi;
    c.a_const = c.ln_2sqrt_pi - 0.5 * c.euler_gamma - 1.0;
    c.rho_sum_const = 1.0 + 0.5 * c.euler_gamma - c.ln_2sqrt_pi;
    return c;
}

ComplexEval log_gamma(ComplexPoint zp) {
    const cplx z = zp;
    check_pole(z, "log_gamma");
    const int m = shift_count(z);

    // log Gamma(z) = log Gamma(z+m) - sum_{k<m} log(z+k); summing principal logs
    // keeps the branch continuous.
    cplx shift_sum{0.0, 0.0};
    double shift_mag = 0.0;
    for (int k = 0; k < m; ++k) {
        const cplx l = std::log(z + static_cast<double>(k));
        shift_sum += l;
        shift_mag += std::abs(l);
    }

    const cplx w = z + static_cast<double>(m);
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    const cplx lw = std::log(w);
    cplx series{0.0, 0.0};
    cplx p = inv;
    for (int k = 1; k <= kAsymTerms; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    const double next = std::abs(kBernoulli[kAsymTerms]) /
                        (2.0 * (kAsymTerms + 1) * (2.0 * kAsymTerms + 1)) * std::abs(p);

    const cplx lead = (w - 0.5) * lw - w + 0.91893853320467274178032973640562;
    ComplexEval out;
    out.value = lead + series - shift_sum;
    out.abs_error = next * remainder_factor(w) +
                    4.0 * kEps * (std::abs((w - 0.5) * lw) + std::abs(w) + shift_mag);
    out.terms_used = static_cast<std::size_t>(m + kAsymTerms);
    return out;
}

ComplexEval digamma(ComplexPoint zp) {
    const cplx z = zp;
    check_pole(z, "digamma");
    const int m = shift_count(z);

    cplx shift_sum{0.0, 0.0};
    double shift_mag = 0.0;
    for (int k = 0; k < m; ++k) {
        const cplx r = 1.0 / (z + static_cast<double>(k));
        shift_sum += r;
        shift_mag += std::abs(r);
    }

    const cplx w = z + static_cast<double>(m);
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    cplx series{0.0, 0.0};
    cplx p = inv2;
    for (int k = 1; k <= kAsymTerms; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    const double next = std::abs(kBernoulli[kAsymTerms]) / (2.0 * (kAsymTerms + 1)) * std::abs(p);

    const cplx lw = std::log(w);
    ComplexEval out;
    out.value = lw - 0.5 * inv - series - shift_sum;
    out.abs_error = next * remainder_factor(w) + 4.0 * kEps * (std::abs(lw) + 1.0 + shift_mag);
    out.terms_used = static_cast<std::size_t>(m + kAsymTerms);
    return out;
}

ComplexEval trigamma(ComplexPoint zp) {
    const cplx z = zp;
    check_pole(z, "trigamma");
    const int m = shift_count(z);

    cplx shift_sum{0.0, 0.0};
    double shift_mag = 0.0;
    for (int k = 0; k < m; ++k) {
        const cplx r = 1.0 / (z + static_cast<double>(k));
        shift_sum += r * r;
        shift_mag += std::norm(r);
    }

    const cplx w = z + static_cast<double>(m);
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    cplx series{0.0, 0.0};
    cplx p = inv2 * inv;
    for (int k = 1; k <= kAsymTerms; ++k) {
        series += kBernoulli[k - 1] * p;
        p *= inv2;
    }
    const double next = std::abs(kBernoulli[kAsymTerms]) * std::abs(p);

    ComplexEval out;
    out.value = inv + 0.5 * inv2 + series + shift_sum;
    out.abs_error = next * remainder_factor(w) + 4.0 * kEps * (std::abs(inv) + shift_mag);
    out.terms_used = static_cast<std::size_t>(m + kAsymTerms);
    return out;
}

RealEval sum_inv_n2_y2(double y) {
    check_positive(y, "sum_inv_n2_y2");
    RealEval out;
    out.value = xcoth_minus_one(kPi * y) / (2.0 * y * y);
    out.abs_error = 8.0 * kEps * out.value;
    return out;
}

RealEval sum_inv_odd2_y2(double y) {
    check_positive(y, "sum_inv_odd2_y2");
    RealEval out;
    out.value = kPi / (4.0 * y) * std::tanh(0.5 * kPi * y);
    out.abs_error = 8.0 * kEps * out.value;
    return out;
}

RealEval sum_inv_even2_y2(double y) {
    check_positive(y, "sum_inv_even2_y2");
    RealEval out;
    out.value = xcoth_minus_one(0.5 * kPi * y) / (2.0 * y * y);
    out.abs_error = 8.0 * kEps * out.value;
    return out;
}

}  // namespace zetalab
