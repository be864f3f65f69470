#pragma once

#include <cstddef>
#include <vector>

namespace zetalab::detail {

/// Largest term count the eta engine will use before reporting non-convergence.
inline constexpr std::size_t kMaxEtaTerms = 40000;

/// Borwein acceleration weights c_0..c_{n-1} in [0, 1], so that
/// eta(s) ~ sum_k (-1)^k c_k (k+1)^{-s}. Computed in the log domain, safe for any n.
std::vector<double> eta_weights(std::size_t n);

/// ln of the a-priori truncation constant: |eta_n(s) - eta(s)| <= exp(log_eta_bound_const(|t|)) / (3+sqrt 8)^n.
double log_eta_bound_const(double abs_t);

/// Smallest n with exp(log_c) / (3+sqrt 8)^n <= target.
std::size_t terms_for(double log_c, double target);

}  // namespace zetalab::detail
