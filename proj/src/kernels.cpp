#include "zetalab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "zetalab/detail/eta.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {
namespace {

constexpr double kScanTol = 1e-11;

double z_from_eta(double t, cplx eta) {
    const cplx den = 1.0 - std::polar(std::sqrt(2.0), -t * std::log(2.0));
    const double theta = log_gamma(ComplexPoint(0.25, 0.5 * t)).value.imag() -
                         0.5 * t * Constants::standard().ln_pi;
    return (std::polar(1.0, theta) * (eta / den)).real();
}

void scan_block(double t0, double step, std::size_t first, std::size_t count, double* out) {
    const double t_max = t0 + step * static_cast<double>(first + count - 1);
    const double t_min = t0 + step * static_cast<double>(first);
    // |1 - 2^{1/2 - it}| >= sqrt(2) - 1
    const std::size_t n = std::min(
        detail::terms_for(detail::log_eta_bound_const(std::max(std::abs(t_max), std::abs(t_min))),
                          kScanTol * (std::sqrt(2.0) - 1.0)),
        detail::kMaxEtaTerms);
    const std::vector<double> c = detail::eta_weights(n);

    std::vector<cplx> term(n);
    std::vector<cplx> rot(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = std::log(static_cast<double>(k + 1));
        const double w = (k % 2 == 0) ? c[k] : -c[k];
        term[k] = w * std::polar(std::exp(-0.5 * lk), -t_min * lk);
        rot[k] = std::polar(1.0, -step * lk);
    }
    for (std::size_t j = 0; j < count; ++j) {
        const double t = t0 + step * static_cast<double>(first + j);
        cplx eta{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            eta += term[k];
            term[k] *= rot[k];
        }
        out[j] = z_from_eta(t, eta);
    }
}

}  // namespace

HardyZWindow::HardyZWindow(double t_lo, double t_hi) {
    const std::size_t n = std::min(
        detail::terms_for(detail::log_eta_bound_const(std::max(std::abs(t_lo), std::abs(t_hi))),
                          kScanTol * (std::sqrt(2.0) - 1.0)),
        detail::kMaxEtaTerms);
    const std::vector<double> c = detail::eta_weights(n);
    lk_.resize(n);
    base_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        lk_[k] = std::log(static_cast<double>(k + 1));
        base_[k] = ((k % 2 == 0) ? c[k] : -c[k]) * std::exp(-0.5 * lk_[k]);
    }
}

double HardyZWindow::operator()(double t) const {
    cplx eta{0.0, 0.0};
    for (std::size_t k = 0; k < lk_.size(); ++k) eta += std::polar(base_[k], -t * lk_[k]);
    return z_from_eta(t, eta);
}

std::vector<double> hardy_z_scan_serial(double t0, double step, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t j = 0; j < count; ++j)
        out[j] = hardy_z(t0 + step * static_cast<double>(j)).value;
    return out;
}

std::vector<double> hardy_z_scan(double t0, double step, std::size_t count, int threads) {
    std::vector<double> out(count);
    const auto blocks = static_cast<long long>((count + kScanBlock - 1) / kScanBlock);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(threads, 1))
    for (long long b = 0; b < blocks; ++b) {
        const std::size_t first = static_cast<std::size_t>(b) * kScanBlock;
        const std::size_t len = std::min(kScanBlock, count - first);
        scan_block(t0, step, first, len, out.data() + first);
    }
    return out;
}

}  // namespace zetalab
