#pragma once

#include "zetalab/types.hpp"

namespace zetalab {

/// Constants of the zero-sum identities. `a_const` is the Hadamard-product
/// exponent a = ln(2 sqrt(pi)) - gamma/2 - 1 and `rho_sum_const` the paired sum
/// over nontrivial zeros 1 + gamma/2 - ln(2 sqrt(pi)); the two cancel exactly.
struct Constants {
    double euler_gamma;
    double ln_pi;
    double ln_2sqrt_pi;
    double a_const;
    double rho_sum_const;

    static Constants standard() noexcept;
};

/// Log-gamma on the branch continuous off the negative real axis (the usual
/// "loggamma"), computed by upward recurrence and the Stirling series.
/// Throws PoleError at nonpositive integers.
ComplexEval log_gamma(ComplexPoint z);

/// psi(z) = Gamma'(z)/Gamma(z). Recurrence to Re z >= 1, |z| >= 15, then the
/// asymptotic expansion in Bernoulli numbers.
ComplexEval digamma(ComplexPoint z);

/// psi'(z) = sum_{n>=0} 1/(n+z)^2.
ComplexEval trigamma(ComplexPoint z);

// Closed forms of shifted inverse-square sums; all throw DomainError for y <= 0.

/// sum_{n>=1} 1/(n^2 + y^2) = -1/(2y^2) + (pi/2y) coth(pi y)
RealEval sum_inv_n2_y2(double y);
/// sum_{n>=1} 1/((2n-1)^2 + y^2) = (pi/4y) tanh(pi y/2)
RealEval sum_inv_odd2_y2(double y);
/// sum_{n>=1} 1/((2n)^2 + y^2) = -1/(2y^2) + (pi/4y) coth(pi y/2)
RealEval sum_inv_even2_y2(double y);

}  // namespace zetalab
