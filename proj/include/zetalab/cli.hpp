#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/claims.hpp"
#include "zetalab/report.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 64 };

inline constexpr const char* kZerosEnv = "ZETA_LAB_ZEROS";

struct RunConfig {
    std::optional<std::string> zero_table_path;
    std::size_t zero_count = 10000;
    std::map<std::string, double> tolerance_overrides;
    std::optional<double> tolerance_all;
    std::string output_dir = ".";
    int parallelism = 1;

    /// Throws PreconditionError for parallelism < 1 or zero_count < 1.
    void validate() const;
    /// Claim context with the zero table loaded (or table_error set).
    ClaimContext context() const;
    double tolerance(const std::string& claim_id, double fallback) const;
};

/// Parses one --tol value: "claim=value" or a bare value applying to every claim.
void apply_tolerance(RunConfig& cfg, const std::string& spec);

/// Grid flag syntax: "lo..hi" (20 points), "lo..hi:n", or a comma list "a,b,c".
std::vector<double> parse_grid(const std::string& spec);

/// Exit code for a set of reports: 1 if any failed (and not inconclusive), else 2 if any
/// inconclusive, else 0.
int exit_code(const std::vector<Report>& reports);

/// Human summary line per report.
void print_reports(std::ostream& out, const std::vector<Report>& reports);

/// Flat JSON array of claim records, numbers rounded to 12 significant digits.
std::string reports_json(const std::vector<Report>& reports, bool with_runtime = true);

/// CSV text with a header row; numbers printed with 12 significant digits.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

int cmd_verify_constants(const RunConfig& cfg, std::ostream& out, const Constants& c = Constants::standard());

struct IdentityGrid {
    std::vector<double> re = linspace(0.2, 0.8, 20);
    std::vector<double> im = linspace(5.0, 60.0, 20);
    std::vector<ComplexPoint> extra;
    double exclusion = 0.05;
};
int cmd_verify_identities(const RunConfig& cfg, const IdentityGrid& grid, std::ostream& out);

/// zero_index is 1-based.
int cmd_lemma1(const RunConfig& cfg, std::size_t zero_index, const std::vector<double>& radii, std::ostream& out);
int cmd_lemma2(const RunConfig& cfg, std::size_t zero_index, std::optional<ComplexPoint> point, std::ostream& out);
int cmd_lemma3(const RunConfig& cfg, const std::vector<double>& xs, const std::vector<double>& ys, std::ostream& out);
int cmd_alpha_scan(const RunConfig& cfg, const std::vector<double>& sigmas, const std::vector<double>& ts,
                   std::ostream& out);
int cmd_zeros_generate(const RunConfig& cfg, double t_lo, double t_hi, const std::string& path, std::ostream& out);
int cmd_zeros_ingest(const RunConfig& cfg, const std::string& path, std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out);

/// Full command-line entry point. Precedence: flags > --config file > ZETA_LAB_ZEROS > defaults.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli
