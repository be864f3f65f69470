#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "zetalab/errors.hpp"
#include "zetalab/zeros.hpp"

using namespace zetalab;

namespace {

ZeroTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse_zero_table(in, "test");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const ZeroTable& bundled() {
    static const ZeroTable t = load_zero_table(std::string(ZETALAB_DATA_DIR) + "/zeros_10000.txt");
    return t;
}

template <class E>
std::size_t line_of(const std::string& text) {
    try {
        parse(text);
    } catch (const E& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(ZeroValue, Validation) {
    EXPECT_THROW(Zero(5.0), DomainError);
    EXPECT_THROW(Zero(20.0, 1.0), DomainError);
    EXPECT_THROW(Zero(20.0, 0.5, 0), DomainError);
    EXPECT_EQ(Zero(20.0, 0.3).cls(), ZeroClass::P1);
    EXPECT_EQ(Zero(20.0).cls(), ZeroClass::P2);
    EXPECT_EQ(Zero(20.0, 0.7).cls(), ZeroClass::P3);
}

TEST(ZeroTableIo, ParsesThreeOrdinates) {
    const ZeroTable t = parse("14.134725\n21.022040\n25.010858\n");
    ASSERT_EQ(t.count(), 3u);
    EXPECT_DOUBLE_EQ(t[1].t, 21.022040);
    EXPECT_EQ(t[0].sigma, 0.5);
    EXPECT_EQ(t.source(), "test");
}

TEST(ZeroTableIo, EmptyAndComments) {
    EXPECT_EQ(parse("").count(), 0u);
    const ZeroTable t = parse("# source: abc\n# note\n\n14.134725\n");
    EXPECT_EQ(t.count(), 1u);
    EXPECT_EQ(t.source(), "abc");
}

TEST(ZeroTableIo, ErrorsCarryLineNumbers) {
    EXPECT_EQ(line_of<OrderError>("21.0\n14.1\n"), 2u);
    EXPECT_EQ(line_of<BoundError>("# c\n5.0\n"), 2u);
    EXPECT_EQ(line_of<ParseError>("14.1\n\n2x.0\n"), 3u);
    EXPECT_EQ(line_of<OrderError>("14.1\n14.1\n"), 2u);
    EXPECT_THROW(load_zero_table("/nonexistent/zeros.txt"), IoError);
}

TEST(ZeroTableIo, Limit) {
    std::istringstream in("14.1\n21.0\n25.0\n");
    EXPECT_EQ(parse_zero_table(in, "x", 2).count(), 2u);
}

TEST(ZeroTableIo, RoundTripIsByteExact) {
    const ZeroTable t = find_zeros(10, 100);
    const std::string text = format_zero_table(t);
    EXPECT_EQ(format_zero_table(parse(text)), text);
}

TEST(ZeroTableIo, RejectsNonIncreasingConstruction) {
    EXPECT_THROW(ZeroTable({Zero(20.0), Zero(15.0)}, "x"), PreconditionError);
}

TEST(FindZeros, Examples) {
    const ZeroTable a = find_zeros(10, 15);
    ASSERT_EQ(a.count(), 1u);
    EXPECT_NEAR(a[0].t, 14.134725, 1e-6);
    EXPECT_EQ(find_zeros(10, 50).count(), 10u);
    EXPECT_EQ(find_zeros(15, 20).count(), 0u);
    EXPECT_EQ(find_zeros(10, 100).count(), 29u);
    EXPECT_THROW(find_zeros(5, 20), DomainError);
}

TEST(FindZeros, MatchesPublishedOrdinates) {
    // Ordinates of the 1st, 2nd, 100th, 1000th and 10000th zeros to 9+ digits.
    const ZeroTable& t = bundled();
    ASSERT_EQ(t.count(), 10000u);
    EXPECT_NEAR(t[0].t, 14.134725141734693, 1e-9);
    EXPECT_NEAR(t[1].t, 21.022039638771555, 1e-9);
    EXPECT_NEAR(t[99].t, 236.524229665816, 1e-9);
    EXPECT_NEAR(t[999].t, 1419.422480945996, 1e-9);
    // Near t = 1e4 the eta sum loses about four digits to cancellation.
    EXPECT_NEAR(t[9999].t, 9877.782654005, 1e-8);
}

TEST(FindZeros, FindsCloseLehmerPair) {
    // Zeros 6709 and 6710 near t = 7005 are 0.0377 apart.
    const ZeroTable t = find_zeros(7004.5, 7006.5);
    std::size_t close = 0;
    for (std::size_t i = 1; i < t.count(); ++i) close += (t[i].t - t[i - 1].t) < 0.05;
    EXPECT_EQ(close, 1u);
}

TEST(FindZeros, ReproducesTableOnLowRange) {
    const ZeroTable gen = find_zeros(10, 100);
    for (std::size_t i = 0; i < gen.count(); ++i) EXPECT_NEAR(gen[i].t, bundled()[i].t, 1e-6);
}

TEST(FindZeros, IndependentOfParallelism) {
    EXPECT_EQ(format_zero_table(find_zeros(10, 400, 1e-10, 1)), format_zero_table(find_zeros(10, 400, 1e-10, 4)));
}

TEST(BundledData, Zeros100Regenerates) {
    EXPECT_EQ(format_zero_table(find_zeros(10, 237)), slurp(std::string(ZETALAB_DATA_DIR) + "/zeros_100.txt"));
}

TEST(BundledData, Zeros10000Regenerates) {
    EXPECT_EQ(format_zero_table(find_zeros(10, 9878.5, 1e-10, 4)),
              slurp(std::string(ZETALAB_DATA_DIR) + "/zeros_10000.txt"));
}

TEST(RhoSum, Basics) {
    const ZeroTable& t = bundled();
    EXPECT_EQ(rho_sum_partial(t, 0).value, 0.0);
    EXPECT_NEAR(rho_sum_partial(t, 1).value, 1 / (0.25 + t[0].t * t[0].t), 1e-16);
    EXPECT_NEAR(rho_sum_partial(t, 1).value, 0.00499898883, 1e-11);
    EXPECT_THROW(rho_sum_partial(t, 10001), RangeError);
}

TEST(RhoSum, MonotoneAndBoundedProperty) {
    const ZeroTable& t = bundled();
    const double c = 0.0230957089661;
    double prev = 0.0;
    for (std::size_t n : {1, 10, 100, 1000, 10000}) {
        const RealEval e = rho_sum_partial(t, n);
        EXPECT_GT(e.value, prev);
        EXPECT_LE(e.value, c);
        EXPECT_LE(c - e.value, e.abs_error);
        prev = e.value;
    }
}

TEST(TailBound, ClosedFormOracle) {
    // 2 * int_T^inf ln(t/2pi)/(2pi t^2) dt = 2 (ln(T/2pi) + 1)/(2pi T); the 1/4 in the
    // kernel only lowers the exact integral, slightly.
    for (double T : {14.0, 100.0, 1000.0, 1e4}) {
        const double closed = 2 * (std::log(T / (2 * M_PI)) + 1) / (2 * M_PI * T);
        EXPECT_LE(tail_bound(T), closed);
        EXPECT_NEAR(tail_bound(T), closed, closed * 1e-3) << T;
    }
}

TEST(TailBound, Examples) {
    EXPECT_GT(tail_bound(100), 0.0);
    EXPECT_NEAR(tail_bound(100), 0.0119917, 1e-6);
    EXPECT_LT(tail_bound(200), tail_bound(100));
    EXPECT_LT(tail_bound(1e4), 1e-3);
    EXPECT_THROW(tail_bound(10), DomainError);
}

TEST(IP, NoZeros) {
    const ZeroTable empty;
    const cplx s(0.3, 12);
    EXPECT_LT(std::abs(I_P(ComplexPoint(s), empty, 0).value - (-1.0 / s + 1.0 / (1.0 - s))), 1e-15);
}

TEST(IP, AntisymmetryExample) {
    const ComplexPoint s(0.3, 12);
    const ZeroTable& t = bundled();
    EXPECT_LT(std::abs(I_P(ComplexPoint(1.0 - cplx(s)), t, 500).value + I_P(s, t, 500).value), 1e-12);
}

TEST(IP, AntisymmetryProperty) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-100.0, 100.0);
    std::uniform_int_distribution<std::size_t> un(0, 3000);
    const ZeroTable& t = bundled();
    for (int i = 0; i < 100; ++i) {
        const cplx s(ux(rng), uy(rng));
        const std::size_t n = un(rng);
        ASSERT_LT(std::abs(I_P(ComplexPoint(1.0 - s), t, n).value + I_P(ComplexPoint(s), t, n).value), 1e-12);
    }
}

TEST(IP, SingularityGuard) {
    const ZeroTable& t = bundled();
    EXPECT_THROW(I_P(ComplexPoint(t[0].rho()), t, 10), SingularityError);
    EXPECT_THROW(I_P(ComplexPoint(0.5, -t[0].t), t, 10), SingularityError);
    EXPECT_THROW(I_P(ComplexPoint(0, 0), t, 10), SingularityError);
    EXPECT_NO_THROW(I_P(ComplexPoint(t[20].rho()), t, 10));
}

TEST(IPExcl, ConsistencyAndBoundedness) {
    const ZeroTable& t = bundled();
    const ComplexPoint s(0.4, 20);
    const Zero& q = t[1];
    const cplx full = I_P(s, t, 100).value;
    const cplx excl = I_P_excl(s, q, t, 100).value;
    EXPECT_LT(std::abs(excl + orbit_sum(s, q) - full), 1e-13);
    EXPECT_TRUE(std::isfinite(std::abs(I_P_excl(ComplexPoint(q.rho()), q, t, 100).value)));
    EXPECT_THROW(I_P_excl(s, Zero(15.0), t, 100), NotFoundError);
}

TEST(IPExcl, SmoothOnCircle) {
    const ZeroTable& t = bundled();
    const Zero& q = t[0];
    double lo = INFINITY, hi = -INFINITY;
    for (int j = 0; j < 64; ++j) {
        const cplx s = q.rho() + std::polar(0.1, 2 * M_PI * j / 64);
        const double v = I_P_excl(ComplexPoint(s), q, t, 1000).value.real();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    EXPECT_LT(hi - lo, 10.0);
}

TEST(T1Bound, Examples) {
    const double b = t1_min_bound();
    EXPECT_NEAR(b, 9.2518015, 1e-6);
    EXPECT_NEAR(2 / (1 + b * b), 0.0230958, 1e-10);
    EXPECT_GT(bundled()[0].t, b);
}

TEST(StripRegionTest, IsolationCheck) {
    const ZeroTable& t = bundled();
    EXPECT_NO_THROW(StripRegion(ComplexPoint(t[0].rho()), 0.5, t));
    EXPECT_THROW(StripRegion(ComplexPoint(t[0].rho()), 7.0, t), PreconditionError);
}
