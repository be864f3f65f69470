#include "zetalab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetalab/detail/eta.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab {
namespace detail {

namespace {
const double kLogRho = std::log(3.0 + std::sqrt(8.0));
}

std::vector<double> eta_weights(std::size_t n) {
    // T_i = (n+i-1)! 4^i / ((n-i)! (2i)!), i = 0..n; c_k = sum_{i>k} T_i / sum_i T_i.
    std::vector<double> lt(n + 1);
    lt[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double a = static_cast<double>(n + i - 1);
        const double b = static_cast<double>(n - i + 1);
        const double c = static_cast<double>(2 * i) * static_cast<double>(2 * i - 1);
        lt[i] = lt[i - 1] + std::log(4.0 * a * b / c);
    }
    const double top = *std::max_element(lt.begin(), lt.end());
    std::vector<double> c(n);
    double tail = 0.0;
    for (std::size_t i = n; i >= 1; --i) {
        tail += std::exp(lt[i] - top);
        c[i - 1] = tail;
    }
    const double total = tail + std::exp(lt[0] - top);
    for (double& v : c) v /= total;
    return c;
}

double log_eta_bound_const(double abs_t) {
    return std::log(3.0) + std::log1p(2.0 * abs_t) + 0.5 * kPi * abs_t;
}

std::size_t terms_for(double log_c, double target) {
    const double n = std::ceil((log_c - std::log(target)) / kLogRho);
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

}  // namespace detail

namespace {

const double kLn2 = std::log(2.0);
const double kLogRho = std::log(3.0 + std::sqrt(8.0));

void check_point(cplx s, double tol) {
    if (!(tol > 0.0)) throw DomainError("zeta: tolerance must be positive");
    if (s.real() < kMinRe || s.real() > kMaxRe || std::abs(s.imag()) > kMaxIm)
        throw DomainError("zeta: s outside the working window");
    if (std::abs(s - 1.0) < kPoleThreshold) throw PoleError("zeta: pole at s = 1");
    if (std::abs(s.real() - 1.0) < kPoleThreshold) {
        const double k = std::round(s.imag() * kLn2 / (2.0 * kPi));
        if (k != 0.0 && std::abs(s - cplx(1.0, 2.0 * kPi * k / kLn2)) < kPoleThreshold)
            throw ConditioningError("zeta: too close to a zero of 1 - 2^(1-s)");
    }
}

ZetaEval evaluate(ComplexPoint sp, double tol) {
    const cplx s = sp;
    check_point(s, tol);
    const double sigma = s.real();
    const double t = s.imag();
    const double at = std::abs(t);

    const cplx pw = std::polar(std::exp((1.0 - sigma) * kLn2), -t * kLn2);  // 2^{1-s}
    const cplx den = 1.0 - pw;
    const cplx dden = pw * kLn2;
    const double dabs = std::abs(den);
    const double ddabs = std::abs(dden);

    // eta' error: Cauchy estimate on the radius-1/2 circle around s.
    const double log_c0 = detail::log_eta_bound_const(at);
    const double log_c1 = std::log(2.0) + detail::log_eta_bound_const(at + 0.5);
    const std::size_t n_zeta = detail::terms_for(log_c0, tol * dabs);
    const double coef = std::exp(log_c1 - log_c0) / dabs + ddabs / (dabs * dabs);
    const std::size_t n_prime = detail::terms_for(log_c0 + std::log(coef), 10.0 * tol);
    std::size_t n = std::max(n_zeta, n_prime);
    bool converged = true;
    if (n > detail::kMaxEtaTerms) {
        n = detail::kMaxEtaTerms;
        converged = false;
    }

    const std::vector<double> c = detail::eta_weights(n);
    cplx eta{0.0, 0.0};
    cplx deta{0.0, 0.0};
    double round = 0.0;
    double dround = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = std::log(static_cast<double>(k + 1));
        const cplx term = std::polar(std::exp(-sigma * lk), -t * lk);
        const double w = (k % 2 == 0) ? c[k] : -c[k];
        eta += w * term;
        deta -= (w * lk) * term;
        const double mag = c[k] * std::abs(term) * (4.0 + at * lk);
        round += mag;
        dround += mag * lk;
    }

    const double trunc_eta = std::exp(log_c0 - static_cast<double>(n) * kLogRho);
    const double trunc_deta = std::exp(log_c1 - static_cast<double>(n) * kLogRho);
    const double err_eta = trunc_eta + kEps * round;
    const double err_deta = trunc_deta + kEps * dround;

    ZetaEval out;
    out.s = sp;
    out.zeta.value = eta / den;
    out.zeta.abs_error = err_eta / dabs + 4.0 * kEps * std::abs(out.zeta.value);
    out.zeta.terms_used = n;
    out.zeta.converged = converged;

    out.zeta_prime.value = deta / den - eta * dden / (den * den);
    out.zeta_prime.abs_error = err_deta / dabs + err_eta * ddabs / (dabs * dabs) +
                               4.0 * kEps * std::abs(out.zeta_prime.value);
    out.zeta_prime.terms_used = n;
    out.zeta_prime.converged = converged;

    out.near_pole_flag = dabs < 1e-3;
    return out;
}

void attach_log_deriv(ZetaEval& e, double zero_threshold) {
    const double za = std::abs(e.zeta.value);
    if (za < zero_threshold) {
        e.near_zero_flag = true;
        return;
    }
    const cplx l = e.zeta_prime.value / e.zeta.value;
    e.log_deriv.value = l;
    e.log_deriv.abs_error = (e.zeta_prime.abs_error + std::abs(l) * e.zeta.abs_error) / za;
    e.log_deriv.terms_used = e.zeta.terms_used;
    e.log_deriv.converged = e.zeta.converged;
}

}  // namespace

ComplexEval zeta(ComplexPoint s, double tol) { return evaluate(s, tol).zeta; }

ComplexEval zeta_prime(ComplexPoint s, double tol) { return evaluate(s, tol).zeta_prime; }

ComplexEval zeta_log_deriv(ComplexPoint s, double tol, double zero_threshold) {
    ZetaEval e = evaluate(s, tol);
    attach_log_deriv(e, zero_threshold);
    if (e.near_zero_flag) throw NearZeroError("zeta_log_deriv: |zeta(s)| below threshold");
    return e.log_deriv;
}

ZetaEval zeta_eval(ComplexPoint s, double tol, double zero_threshold) {
    ZetaEval e = evaluate(s, tol);
    attach_log_deriv(e, zero_threshold);
    return e;
}

double functional_eq_residual(ComplexPoint sp) {
    const cplx s = sp;
    const cplx r = 1.0 - s;
    const double ln_pi = Constants::standard().ln_pi;
    // Both completed sides in log form, rescaled by the larger modulus.
    const cplx l1 = log_gamma(ComplexPoint(0.5 * s)).value - 0.5 * s * ln_pi;
    const cplx l2 = log_gamma(ComplexPoint(0.5 * r)).value - 0.5 * r * ln_pi;
    const double m = std::max(l1.real(), l2.real());
    const cplx a = std::exp(l1 - m) * zeta(sp, 1e-14).value;
    const cplx b = std::exp(l2 - m) * zeta(ComplexPoint(r), 1e-14).value;
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

double sumdig_residual(ComplexPoint sp) {
    const cplx s = sp;
    const cplx r = 1.0 - s;
    const cplx ls = zeta_log_deriv(sp, 1e-14).value;
    const cplx lr = zeta_log_deriv(ComplexPoint(r), 1e-14).value;
    const cplx ps = digamma(ComplexPoint(0.5 * s)).value;
    const cplx pr = digamma(ComplexPoint(0.5 * r)).value;
    return std::abs(ls + lr + 0.5 * ps + 0.5 * pr - Constants::standard().ln_pi);
}

double rs_theta(double t) {
    return log_gamma(ComplexPoint(0.25, 0.5 * t)).value.imag() -
           0.5 * t * Constants::standard().ln_pi;
}

RealEval hardy_z(double t, double tol) {
    const ComplexEval lg = log_gamma(ComplexPoint(0.25, 0.5 * t));
    const double theta = lg.value.imag() - 0.5 * t * Constants::standard().ln_pi;
    const ComplexEval z = zeta(ComplexPoint(0.5, t), tol);
    RealEval out;
    out.value = (std::polar(1.0, theta) * z.value).real();
    out.abs_error = z.abs_error + std::abs(z.value) * (lg.abs_error + kEps * std::abs(theta));
    out.terms_used = z.terms_used;
    out.converged = z.converged;
    return out;
}

}  // namespace zetalab
