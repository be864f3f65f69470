#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "zetalab/errors.hpp"

namespace zetalab {

using cplx = std::complex<double>;

/// A finite point s = x + iy. Construction rejects NaN and infinities, so every
/// operation taking a ComplexPoint can assume finite input.
class ComplexPoint {
public:
    ComplexPoint() = default;
    ComplexPoint(double re, double im) : z_(re, im) { check(); }
    ComplexPoint(cplx z) : z_(z) { check(); }  // NOLINT(google-explicit-constructor)

    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }
    cplx value() const noexcept { return z_; }
    operator cplx() const noexcept { return z_; }  // NOLINT(google-explicit-constructor)

    ComplexPoint conj() const { return {z_.real(), -z_.imag()}; }
    /// s -> 1 - s
    ComplexPoint reflect() const { return {1.0 - z_.real(), -z_.imag()}; }

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

private:
    void check() const {
        if (!std::isfinite(z_.real()) || !std::isfinite(z_.imag()))
            throw DomainError("ComplexPoint: non-finite component");
    }

    cplx z_{};
};

/// A numeric result with an absolute error bound. `converged` is false whenever the
/// truncation criterion was not met within the term budget; `abs_error` is then still
/// the best available estimate.
template <class T>
struct Evaluation {
    T value{};
    double abs_error = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
};

using RealEval = Evaluation<double>;
using ComplexEval = Evaluation<cplx>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace zetalab
