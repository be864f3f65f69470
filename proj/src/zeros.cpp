#include "zetalab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "zetalab/kernels.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

Zero::Zero(double t_, double sigma_, int multiplicity_)
    : t(t_), sigma(sigma_), multiplicity(multiplicity_) {
    if (!(t >= kT1Bound) || !std::isfinite(t))
        throw DomainError("Zero: ordinate below the t1 bound");
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("Zero: sigma outside (0, 1)");
    if (multiplicity < 1) throw DomainError("Zero: multiplicity must be >= 1");
}

ZeroClass Zero::cls() const noexcept {
    if (sigma < 0.5) return ZeroClass::P1;
    if (sigma > 0.5) return ZeroClass::P3;
    return ZeroClass::P2;
}

ZeroTable::ZeroTable(std::vector<Zero> zeros, std::string source)
    : zeros_(std::move(zeros)), source_(std::move(source)) {
    for (std::size_t i = 1; i < zeros_.size(); ++i)
        if (!(zeros_[i].t > zeros_[i - 1].t))
            throw PreconditionError("ZeroTable: ordinates must be strictly increasing");
}

std::optional<std::size_t> ZeroTable::index_of(const Zero& q, std::size_t n) const {
    const std::size_t m = std::min(n, zeros_.size());
    auto it = std::lower_bound(zeros_.begin(), zeros_.begin() + static_cast<std::ptrdiff_t>(m),
                               q.t - 1e-9, [](const Zero& z, double v) { return z.t < v; });
    for (; it != zeros_.begin() + static_cast<std::ptrdiff_t>(m) && it->t <= q.t + 1e-9; ++it)
        if (it->sigma == q.sigma) return static_cast<std::size_t>(it - zeros_.begin());
    return std::nullopt;
}

namespace {

std::vector<cplx> orbit_points(const Zero& z) {
    const cplx r = z.rho();
    return {r, std::conj(r), 1.0 - r, 1.0 - std::conj(r)};
}

}  // namespace

StripRegion::StripRegion(ComplexPoint q, double R, const ZeroTable& table) : q_(q), R_(R) {
    if (!(R > 0.0)) throw PreconditionError("StripRegion: R must be positive");
    const cplx qc = q;
    for (const Zero& z : table.zeros()) {
        if (z.t + 1.0 < std::abs(qc.imag()) - R) continue;
        if (z.t - 1.0 > std::abs(qc.imag()) + R) break;
        for (const cplx p : orbit_points(z)) {
            const double d = std::abs(p - qc);
            if (d < 1e-9) continue;  // q itself
            if (d <= R)
                throw PreconditionError("StripRegion: disk of radius " + std::to_string(R) +
                                        " contains another zero");
        }
    }
}

ZeroTable parse_zero_table(std::istream& in, const std::string& default_source, std::size_t limit) {
    std::vector<Zero> zeros;
    std::string source = default_source;
    bool have_source = false;
    std::string line;
    std::size_t lineno = 0;
    while (zeros.size() < limit && std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view tok(line.data() + first, last - first + 1);
        if (tok.front() == '#') {
            constexpr std::string_view tag = "# source:";
            if (!have_source && tok.substr(0, tag.size()) == tag) {
                std::string_view rest = tok.substr(tag.size());
                while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
                source = std::string(rest);
                have_source = true;
            }
            continue;
        }
        double t = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), t);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(t))
            throw ParseError("malformed ordinate '" + std::string(tok) + "'", lineno);
        if (t < kT1Bound)
            throw BoundError("ordinate " + std::string(tok) + " below t1 bound", lineno);
        if (!zeros.empty() && !(t > zeros.back().t))
            throw OrderError("ordinate " + std::string(tok) + " not increasing", lineno);
        zeros.emplace_back(t);
    }
    return ZeroTable(std::move(zeros), source);
}

ZeroTable load_zero_table(const std::string& path, std::size_t limit) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open zero table '" + path + "'");
    return parse_zero_table(in, path, limit);
}

std::string format_zero_table(const ZeroTable& table) {
    std::string out = "# source: " + table.source() + "\n";
    char buf[64];
    for (const Zero& z : table.zeros()) {
        std::snprintf(buf, sizeof buf, "%.9f\n", z.t);
        out += buf;
    }
    return out;
}

void save_zero_table(const ZeroTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write zero table '" + path + "'");
    out << format_zero_table(table);
    if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

struct Bracket {
    double a, b;
    double za, zb;
};

double refine(const Bracket& br, double tol) {
    if (br.za == 0.0) return br.a;
    if (br.zb == 0.0) return br.b;
    const HardyZWindow f(br.a, br.b);
    auto done = [tol](double a, double b) { return b - a <= 2.0 * tol; };
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, br.a, br.b, br.za, br.zb, done, iters);
    return 0.5 * (r.first + r.second);
}

// Sign-change brackets among consecutive samples of z at t0 + i h.
void collect(const std::vector<double>& z, double t0, double h, std::vector<Bracket>& out) {
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        const double a = t0 + h * static_cast<double>(i);
        const double b = t0 + h * static_cast<double>(i + 1);
        if (z[i] == 0.0) {
            out.push_back({a, a, 0.0, 0.0});
        } else if (z[i] * z[i + 1] < 0.0) {
            out.push_back({a, b, z[i], z[i + 1]});
        }
    }
}

}  // namespace

ZeroTable find_zeros(double t_lo, double t_hi, double tol, int parallelism) {
    if (!(t_lo >= 9.5) || !(t_hi > t_lo) || t_hi > kMaxIm)
        throw DomainError("find_zeros: need 9.5 <= t_lo < t_hi <= " + std::to_string(kMaxIm));
    if (!(tol > 0.0)) throw DomainError("find_zeros: tol must be positive");

    const auto cells = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / kScanStep));
    const double h = (t_hi - t_lo) / static_cast<double>(cells);
    std::vector<double> z = hardy_z_scan(t_lo, h, cells + 1, parallelism);
    if (z.back() == 0.0) z.back() = hardy_z(t_hi).value;  // keep a zero at t_hi itself

    std::vector<Bracket> brackets;
    collect(z, t_lo, h, brackets);
    if (z.back() == 0.0) brackets.push_back({t_hi, t_hi, 0.0, 0.0});

    // Same-sign dips: a local minimum of |Z| may hide two zeros inside one cell.
    std::vector<std::size_t> dips;
    for (std::size_t i = 1; i + 1 < z.size(); ++i)
        if (z[i - 1] * z[i] > 0.0 && z[i] * z[i + 1] > 0.0 && std::abs(z[i]) <= std::abs(z[i - 1]) &&
            std::abs(z[i]) <= std::abs(z[i + 1]))
            dips.push_back(i);
    constexpr std::size_t kFine = 64;
    const double hf = 2.0 * h / static_cast<double>(kFine);
    auto fine = parallel_map<std::vector<double>>(dips.size(), parallelism, [&](std::size_t j) {
        return hardy_z_scan(t_lo + h * static_cast<double>(dips[j] - 1), hf, kFine + 1, 1);
    });
    for (std::size_t j = 0; j < dips.size(); ++j) {
        std::vector<double>& zf = fine[j];
        zf.front() = z[dips[j] - 1];
        zf.back() = z[dips[j] + 1];
        collect(zf, t_lo + h * static_cast<double>(dips[j] - 1), hf, brackets);
    }
    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& x, const Bracket& y) { return x.a < y.a; });

    const std::vector<double> ts = parallel_map<double>(
        brackets.size(), parallelism, [&](std::size_t i) { return refine(brackets[i], tol); });

    std::vector<Zero> zeros;
    zeros.reserve(ts.size());
    for (double t : ts)
        if (zeros.empty() || t > zeros.back().t + tol) zeros.emplace_back(t);

    char src[160];
    std::snprintf(src, sizeof src, "find_zeros t_lo=%.9g t_hi=%.9g step=%.9g tol=%.3g", t_lo, t_hi, h,
                  tol);
    return ZeroTable(std::move(zeros), src);
}

double tail_bound(double T) {
    if (!(T >= 14.0) || !std::isfinite(T)) throw DomainError("tail_bound: requires T >= 14");
    auto f = [](double t) { return std::log(t / (2.0 * kPi)) / (2.0 * kPi * (0.25 + t * t)); };
    const double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, T, std::numeric_limits<double>::infinity(), 15, 1e-13);
    return 2.0 * I;
}

RealEval rho_sum_partial(const ZeroTable& table, std::size_t N) {
    if (N > table.count()) throw RangeError("rho_sum_partial: N exceeds table size");
    RealEval out;
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const Zero& z = table[i];
        const double s = z.sigma;
        const double t2 = z.t * z.t;
        sum += z.orbit_weight() * (2.0 * s / (s * s + t2) + 2.0 * (1.0 - s) / ((1.0 - s) * (1.0 - s) + t2));
    }
    out.value = sum;
    out.abs_error = tail_bound(N > 0 ? std::max(table[N - 1].t, 14.0) : 14.0);
    out.terms_used = N;
    return out;
}

cplx orbit_sum(ComplexPoint sp, const Zero& z) {
    const cplx s = sp;
    const cplx r = z.rho();
    const cplx rc = std::conj(r);
    return z.orbit_weight() *
           (1.0 / (s - r) + 1.0 / (s - rc) + 1.0 / (s - (1.0 - r)) + 1.0 / (s - (1.0 - rc)));
}

namespace {

constexpr double kSingular = 1e-9;

void check_near(cplx s, const Zero& z) {
    for (const cplx p : orbit_points(z))
        if (std::abs(s - p) < kSingular)
            throw SingularityError("I_P: s within 1e-9 of a zero or its reflection");
}

ComplexEval kernel_sum(ComplexPoint sp, const ZeroTable& table, std::size_t N, std::size_t skip) {
    if (N > table.count()) throw RangeError("I_P: N exceeds table size");
    const cplx s = sp;
    if (std::abs(s) < kSingular || std::abs(s - 1.0) < kSingular)
        throw SingularityError("I_P: s at 0 or 1");
    cplx sum = -1.0 / s + 1.0 / (1.0 - s);
    for (std::size_t i = 0; i < N; ++i) {
        if (i == skip) continue;
        check_near(s, table[i]);
        sum += orbit_sum(sp, table[i]);
    }
    const double T = N > 0 ? table[N - 1].t : kT1Bound;
    const double u = std::abs(s - 0.5);
    ComplexEval out;
    out.value = sum;
    // Zeros above T: |weighted orbit term| <= 2|u| / (3t^2/4) once t > 2|u|, integrated
    // against the density ln(t/2pi)/2pi, safety factor 2.
    out.abs_error = 2.0 * (8.0 / 3.0) * u * (std::log(T / (2.0 * kPi)) + 1.0) / (2.0 * kPi * T) +
                    4.0 * kEps * static_cast<double>(N + 2) * std::abs(sum);
    out.terms_used = N;
    out.converged = T > 2.0 * u;
    return out;
}

}  // namespace

ComplexEval I_P(ComplexPoint s, const ZeroTable& table, std::size_t N) {
    return kernel_sum(s, table, N, std::numeric_limits<std::size_t>::max());
}

ComplexEval I_P_excl(ComplexPoint s, const Zero& q, const ZeroTable& table, std::size_t N) {
    if (N > table.count()) throw RangeError("I_P_excl: N exceeds table size");
    const auto idx = table.index_of(q, N);
    if (!idx) throw NotFoundError("I_P_excl: q not among the used zeros");
    return kernel_sum(s, table, N, *idx);
}

double t1_min_bound() { return std::sqrt(2.0 / 0.0230958 - 1.0); }

}  // namespace zetalab
