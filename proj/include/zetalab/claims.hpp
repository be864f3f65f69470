#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/report.hpp"
#include "zetalab/types.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

struct ClaimContext {
    /// Zero table for the I_P based checks; null when loading failed (see table_error).
    std::shared_ptr<const ZeroTable> table;
    std::string table_error;
    std::size_t zero_count = 10000;
    int parallelism = 1;
    std::map<std::string, double> tol_overrides;
    std::optional<double> tol_all;

    double tolerance(const std::string& claim_id, double fallback) const;
    /// min(zero_count, table size); 0 without a table.
    std::size_t zero_budget() const;
};

struct Claim {
    int number;
    std::string id;
    std::string summary;
    double budget_s;
    std::function<Report(const ClaimContext&)> run;
};

/// Every acceptance claim in criterion order.
const std::vector<Claim>& claim_ledger();

/// Runs one claim, recording runtime. Exceptions become a failed Report carrying the
/// message; exceeding the runtime budget also fails the claim.
Report run_claim(const Claim& claim, const ClaimContext& ctx);

// Grid helpers shared with the CLI.

struct ResidualRow {
    double re = 0.0;
    double im = 0.0;
    double residual = 0.0;
    bool skipped = false;
    bool inconclusive = false;
    std::string note;
};

std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Row-major product grid, re varying slowest.
std::vector<ComplexPoint> product_grid(const std::vector<double>& re, const std::vector<double>& im);

/// 20x20 grid over Re in [0.2, 0.8], Im in [5, 60].
std::vector<ComplexPoint> standard_grid();

/// Evaluates f at each point in input order. Points within `exclusion` of a zero in
/// `zeros` (or a reflection) are skipped; evaluation errors mark the row inconclusive.
std::vector<ResidualRow> residual_grid(const std::vector<ComplexPoint>& points,
                                       const std::function<double(ComplexPoint)>& f,
                                       const std::vector<Zero>& zeros, double exclusion, int parallelism);

/// Worst residual over rows that were neither skipped nor inconclusive.
double worst_residual(const std::vector<ResidualRow>& rows);

/// |Re zeta'/zeta(s) - (ln(pi)/2 + Re(-psi(s/2)/2 + I_P(s)))| with the first N zeros.
double dzeta_re_residual(ComplexPoint s, const ZeroTable& table, std::size_t N);

/// |I_P(1-s) + I_P(s)| with the first N zeros.
double ip_antisymmetry_residual(ComplexPoint s, const ZeroTable& table, std::size_t N);

/// The zeros of Z on [9.5, 61], used to exclude near-zero points from the standard grid.
const std::vector<Zero>& low_zeros();

}  // namespace zetalab
