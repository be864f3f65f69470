#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

/// Lower bound on the ordinate of any nontrivial zero; smaller input is treated as corrupt.
inline constexpr double kT1Bound = 9.2518015;

enum class ZeroClass { P1, P2, P3 };  // sigma < 1/2, sigma = 1/2, sigma > 1/2

/// A stored zero rho = sigma + it with t > 0. It stands for its whole orbit
/// {rho, conj rho, 1 - rho, 1 - conj rho}; on the critical line the orbit has two points.
struct Zero {
    double t = 0.0;
    double sigma = 0.5;
    int multiplicity = 1;

    Zero() = default;
    /// Throws DomainError for t < kT1Bound, sigma outside (0, 1) or multiplicity < 1.
    explicit Zero(double t_, double sigma_ = 0.5, int multiplicity_ = 1);

    cplx rho() const noexcept { return {sigma, t}; }
    ZeroClass cls() const noexcept;
    /// Weight of the four reflected terms: k, halved on the line where the orbit doubles up.
    double orbit_weight() const noexcept { return sigma == 0.5 ? 0.5 * multiplicity : multiplicity; }
};

class ZeroTable {
public:
    ZeroTable() = default;
    /// Throws PreconditionError unless ordinates are strictly increasing.
    ZeroTable(std::vector<Zero> zeros, std::string source);

    const std::vector<Zero>& zeros() const noexcept { return zeros_; }
    const std::string& source() const noexcept { return source_; }
    std::size_t count() const noexcept { return zeros_.size(); }
    const Zero& operator[](std::size_t i) const { return zeros_[i]; }

    /// Index of the stored zero matching q (ordinate within 1e-9, same sigma) among the first n.
    std::optional<std::size_t> index_of(const Zero& q,
                                        std::size_t n = std::numeric_limits<std::size_t>::max()) const;

private:
    std::vector<Zero> zeros_;
    std::string source_;
};

/// Closed disk |s - q| <= R free of every tabulated orbit point except q's own.
class StripRegion {
public:
    /// Throws PreconditionError if another zero (or reflection) lies in the disk.
    StripRegion(ComplexPoint q, double R, const ZeroTable& table);

    ComplexPoint q() const noexcept { return q_; }
    double R() const noexcept { return R_; }

private:
    ComplexPoint q_;
    double R_;
};

/// Reads one ordinate per line; '#' lines are comments, a "# source: ..." line sets the
/// provenance. Blank lines are skipped. At most `limit` ordinates are read.
/// Throws IoError, ParseError, OrderError, BoundError (the latter three with line numbers).
ZeroTable load_zero_table(const std::string& path,
                          std::size_t limit = std::numeric_limits<std::size_t>::max());
ZeroTable parse_zero_table(std::istream& in, const std::string& default_source,
                           std::size_t limit = std::numeric_limits<std::size_t>::max());

/// "# source: <source>" then one ordinate per line with 9 decimals.
std::string format_zero_table(const ZeroTable& table);
void save_zero_table(const ZeroTable& table, const std::string& path);

inline constexpr double kScanStep = 0.05;

/// Sign changes of Hardy Z on [t_lo, t_hi], refined by a bracketing solver until the
/// bracket is narrower than 2 tol. Cells around a same-sign local minimum of |Z| are
/// rescanned on a 32x finer grid so close pairs are not lost.
ZeroTable find_zeros(double t_lo, double t_hi, double tol = 1e-10, int parallelism = 1);

/// Upper estimate of sum_{t > T} 1/(1/4 + t^2): twice the integral of that kernel
/// against the zero density ln(t/2pi)/2pi. Throws DomainError for T < 14.
double tail_bound(double T);

/// Sum over the first N stored zeros of their weighted orbit contribution to sum 1/rho,
/// i.e. w (2 sigma/(sigma^2+t^2) + 2(1-sigma)/((1-sigma)^2+t^2)); 1/(1/4+t^2) on the line.
/// abs_error = tail_bound(t_N). Throws RangeError for N > count.
RealEval rho_sum_partial(const ZeroTable& table, std::size_t N);

/// Weighted orbit term 1/(s-rho) + 1/(s-conj rho) + 1/(s-1+rho) + 1/(s-1+conj rho).
cplx orbit_sum(ComplexPoint s, const Zero& z);

/// -1/s + 1/(1-s) + sum of orbit terms over the first N zeros.
/// Throws SingularityError within 1e-9 of 0, 1 or a used orbit point, RangeError for N > count.
ComplexEval I_P(ComplexPoint s, const ZeroTable& table, std::size_t N);

/// I_P with every orbit term of q removed (all k(q) copies).
/// Throws NotFoundError if q is not among the first N zeros.
ComplexEval I_P_excl(ComplexPoint s, const Zero& q, const ZeroTable& table, std::size_t N);

/// t solving 2/(1+t^2) = 0.0230958.
double t1_min_bound();

}  // namespace zetalab
