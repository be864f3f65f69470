#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/report.hpp"
#include "zetalab/types.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

/// zeta tolerance used by every lemma-level evaluation.
inline constexpr double kLemmaTol = 1e-13;

/// alpha(s) = (1/2) ln pi - (1/4) Re[psi(s/2) + psi((1-s)/2)].
RealEval alpha(ComplexPoint s);

/// The same quantity from its explicit real series, summing `terms` terms and adding the
/// midpoint-integral tail (error ~ |f'|/24 at the cut). converged = false when the cut is
/// not well past the y-scale of the summand. Throws DomainError unless 0 < x < 1, y > 0.
RealEval alpha_series(double x, double y, std::size_t terms = 0);

/// d alpha/dx = -(1/8) Re[psi'(s/2) - psi'((1-s)/2)] = -S(x, y)/2 with S from lemma3_S.
RealEval alpha_partial_x(ComplexPoint s);
/// d alpha/dy = (1/8) Im[psi'(s/2) - psi'((1-s)/2)].
RealEval alpha_partial_y(ComplexPoint s);

/// omega(s) = (1/2) ln pi + Re(-psi(s/2)/2 + I_{P \ q}(s)), finite at s = q.
RealEval omega(ComplexPoint s, const Zero& q, const ZeroTable& table, std::size_t N);

/// g(x, y) = Re zeta'/zeta(s) * Re zeta'/zeta(1-s). Throws NearZeroError.
RealEval g(double x, double y);

/// F(s) = Re zeta'/zeta(s) - Re zeta'/zeta(1-s). Throws NearZeroError.
RealEval balance_F(ComplexPoint s);

struct ProbeConfig {
    Zero q;
    const ZeroTable* table = nullptr;  // non-owning; must outlive the config
    double R = 0.5;
    std::vector<double> radii;
    std::size_t zero_budget = 0;
    double tol_root = 1e-9;
};

/// Validates radii <= R and disk isolation of q in the table (PreconditionError).
ProbeConfig make_probe_config(const Zero& q, const ZeroTable& table, double R,
                              std::vector<double> radii, std::size_t zero_budget,
                              double tol_root = 1e-9);

struct ProbeResult {
    double r = 0.0;
    ComplexPoint m;
    double theta = 0.0;
    double beta_tan = 0.0;
    /// Smallest |beta_tan| distinguishable from rounding at this radius.
    double beta_floor = 0.0;
    double residual = 0.0;
    bool found = false;
};

inline constexpr std::size_t kProbeSamples = 256;

/// Balance point m_r on the lower semicircle |s - q| = r: 256 samples of F over
/// theta in (pi, 2 pi), the sign change nearest theta = 3pi/2, then bisection in theta
/// down to rounding level. Throws PreconditionError for r > R, NotFoundError without a
/// sign change, ConditioningError if no sample could be evaluated.
ProbeResult find_m_r(const ProbeConfig& cfg, double r);

/// Like find_m_r but records a missing sign change as found = false.
ProbeResult probe(const ProbeConfig& cfg, double r);

/// Least-squares slope of log|beta_tan| against log r over the configured radii; passes when
/// the slope is in [0.8, 1.2]. Probes whose |beta_tan| does not exceed their rounding floor
/// carry no slope information. Throws InsufficientDataError with fewer than 4 distinct radii
/// spanning a decade, fewer than 4 found probes, or fewer than 4 resolvable angles.
Report beta_scaling_fit(const ProbeConfig& cfg);

/// |Re zeta'/zeta(m_r) - alpha(m_r)| against 1e-6 plus propagated error.
Report re_midl_check(const ProbeConfig& cfg, double r);

/// Max over 512 samples of |s - q| = R of |F(s) - Re(2k/(s - q))|: a sampled lower
/// estimate of H1(R).
RealEval estimate_H1(const ProbeConfig& cfg);

/// Arc response k(x_tau - x_m)/r^2 - omega(m_r) + omega(x_tau + i(t_q - sqrt(r^2 - tau^2)))
/// with x_tau = sigma_q + tau, checked for strict increase over the sorted tau grid.
/// measured = {min successive increment, values...}. PreconditionError if some |tau| >= r.
Report arc_response(const ProbeConfig& cfg, double r, std::vector<double> tau_values);

/// Central difference of x -> g(x, f_r(x)) at x_{m_r}, f_r(x) = t_q - sqrt(r^2 - (sigma_q - x)^2).
/// step <= 0 selects min(1e-5, r/100). PreconditionError if step >= r or x_m +- step leaves the arc.
RealEval g_arc_derivative(const ProbeConfig& cfg, double r, double step = 0.0);

/// |Re psi'(q/2) - Re psi'((1-q)/2)|; passes at 1e-10 when sigma = 1/2. Off the line the
/// report records the sign of (1 - 2 sigma) G instead.
Report lemma2_check(const Zero& q);
/// Same measurement for an arbitrary strip point (used for hypothetical off-line zeros).
Report lemma2_check(ComplexPoint q);

/// S(x, y) = sum_{n>=0} [((2n+x)^2 - y^2)/((2n+x)^2 + y^2)^2 - ((2n+1-x)^2 - y^2)/((2n+1-x)^2 + y^2)^2].
/// Throws DomainError unless 0 < x <= 1/2 and y >= 4.
RealEval lemma3_S(double x, double y);
/// G with S = (1 - 2x) G, summed from the bracketed form so x = 1/2 needs no division.
RealEval lemma3_G(double x, double y);

/// Sum of the positive bracket terms: (pi^2/8) y^2/cosh^2(pi y/2) + (pi^2/8) y^2/sinh^2(pi y/2)
/// + (pi/4y) tanh(pi y/2) + 1/y^2 + (pi^2/(8y cosh^2(pi y/2)))(3/(2y) + (pi/2) tanh(pi y/2)).
/// Throws DomainError for y < 4.
RealEval lemma3_positive_part_bound(double y);

/// alpha_series(sigma, t) < 0 at every grid point; measured = {max value, its sigma, its t}.
Report alpha_negativity_scan(const std::vector<double>& sigma_grid, const std::vector<double>& t_grid,
                             int parallelism = 1);

}  // namespace zetalab
