#pragma once

#include "zetalab/types.hpp"

namespace zetalab {

inline constexpr double kZeroThreshold = 1e-8;
inline constexpr double kPoleThreshold = 1e-6;
inline constexpr double kDefaultZetaTol = 1e-12;

/// Working window of the eta engine. The real-part range covers s and 1 - s for every
/// strip point; the height limit is where the weight count stays within budget.
inline constexpr double kMinRe = 0.0;
inline constexpr double kMaxRe = 2.0;
inline constexpr double kMaxIm = 12000.0;

struct ZetaEval {
    ComplexPoint s;
    ComplexEval zeta;
    ComplexEval zeta_prime;
    ComplexEval log_deriv;
    bool near_zero_flag = false;
    bool near_pole_flag = false;
};

/// zeta(s) = eta(s) / (1 - 2^{1-s}) with Borwein-accelerated eta.
/// Throws PoleError within 1e-6 of s = 1, ConditioningError within 1e-6 of another
/// zero of 1 - 2^{1-s}, DomainError outside the working window.
ComplexEval zeta(ComplexPoint s, double tol = kDefaultZetaTol);

/// zeta'(s) from the term-wise differentiated eta series and the quotient rule;
/// abs_error <= 10 tol when converged.
ComplexEval zeta_prime(ComplexPoint s, double tol = kDefaultZetaTol);

/// zeta'/zeta. Throws NearZeroError when |zeta(s)| < zero_threshold.
ComplexEval zeta_log_deriv(ComplexPoint s, double tol = kDefaultZetaTol,
                           double zero_threshold = kZeroThreshold);

/// zeta, zeta' and, when conditioned, zeta'/zeta from a single eta pass. Never throws
/// NearZeroError; sets near_zero_flag instead and leaves log_deriv zeroed.
ZetaEval zeta_eval(ComplexPoint s, double tol = kDefaultZetaTol,
                   double zero_threshold = kZeroThreshold);

/// Relative residual of Gamma(s/2) pi^{-s/2} zeta(s) = Gamma((1-s)/2) pi^{-(1-s)/2} zeta(1-s).
double functional_eq_residual(ComplexPoint s);

/// |zeta'/zeta(s) + zeta'/zeta(1-s) + psi(s/2)/2 + psi((1-s)/2)/2 - ln pi|.
double sumdig_residual(ComplexPoint s);

/// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi.
double rs_theta(double t);

/// Hardy Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.
RealEval hardy_z(double t, double tol = kDefaultZetaTol);

}  // namespace zetalab
