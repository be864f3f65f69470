#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace zetalab {

/// Reference evaluation order: f(0), f(1), ... on the calling thread.
template <class T, class F>
std::vector<T> serial_map(std::size_t count, F&& f) {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
}

/// Same result as serial_map, evaluated on `threads` OpenMP threads. Every index writes
/// its own slot so the output order never depends on scheduling. The first exception
/// raised by any index (lowest index wins) is rethrown after the loop.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
    if (threads <= 1) return serial_map<T>(count, f);
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// Hardy Z on the grid t0 + j*step, j < count, one direct hardy_z call per point.
std::vector<double> hardy_z_scan_serial(double t0, double step, std::size_t count);

/// Same grid through the block kernel: each block of kScanBlock points seeds the eta
/// terms once and advances them by per-term rotators (k+1)^{-i step}. Blocks run in
/// parallel; the result is independent of `threads`.
std::vector<double> hardy_z_scan(double t0, double step, std::size_t count, int threads);

inline constexpr std::size_t kScanBlock = 256;

/// Hardy Z for t in a window [t_lo, t_hi] with the eta weights, logarithms and moduli
/// cached, so each call costs one sincos per term. Used by the zero refiner.
class HardyZWindow {
public:
    HardyZWindow(double t_lo, double t_hi);
    double operator()(double t) const;

private:
    std::vector<double> lk_;
    std::vector<double> base_;
};

}  // namespace zetalab
