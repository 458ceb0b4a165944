#include "iteral/calculus.hpp"
#include "iteral/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace iteral {
namespace {

constexpr double kCos1 = 0.54030230586813971740;
constexpr double kHalfSin1 = 0.42073549240394825333;
constexpr double kDottie = 0.73908513321516064166;

// Taylor coefficients from 40-digit numerical differentiation of the
// nested functions (independent of the composition code).
constexpr double kCosCos[] = {0.5403023058681397174, 0.0, 0.42073549240394825333, 0.0, -0.10259907926717981912,
                              0.0, -0.0051056377767895212946, 0.0, 0.0049246064650623074906};
constexpr double kCos3[] = {0.85755321584639341574, 0.0, -0.21642434238516171966, 0.0, -0.023124849708062098959,
                            0.0, 0.04602955927076950934, 0.0, -0.0087561539531525754392};
constexpr double kSin3[] = {0.0, 1.0, 0.0, -0.5, 0.0, 0.275, 0.0, -0.14503968253968253968};

TEST(TrigSeries, Coefficients)
{
    const auto c = cos_series(4);
    ASSERT_EQ(c.order(), 4);
    EXPECT_EQ(c[0], 1.0);
    EXPECT_EQ(c[1], 0.0);
    EXPECT_EQ(c[2], -0.5);
    EXPECT_EQ(c[3], 0.0);
    EXPECT_DOUBLE_EQ(c[4], 1.0 / 24);

    const auto s = sin_series(3);
    ASSERT_EQ(s.order(), 3);
    EXPECT_EQ(s[0], 0.0);
    EXPECT_EQ(s[1], 1.0);
    EXPECT_EQ(s[2], 0.0);
    EXPECT_DOUBLE_EQ(s[3], -1.0 / 6);

    const auto c0 = cos_series(0);
    ASSERT_EQ(c0.order(), 0);
    EXPECT_EQ(c0[0], 1.0);
    EXPECT_THROW(cos_series(-1), std::invalid_argument);
}

TEST(TrigSeries, TailBoundCoversTruncation)
{
    for (int n = 0; n <= 12; ++n) {
        const auto c = cos_series(n);
        const auto s = sin_series(n);
        for (double z = -1.0; z <= 1.0; z += 0.01) {
            EXPECT_LE(std::abs(c.evaluate(z) - std::cos(z)), c.tail_bound() + 1e-15);
            EXPECT_LE(std::abs(s.evaluate(z) - std::sin(z)), s.tail_bound() + 1e-15);
        }
    }
}

TEST(CauchyProduct, CosSquared)
{
    const auto sq = cauchy_product(cos_series(4), cos_series(4));
    ASSERT_EQ(sq.order(), 4);
    EXPECT_DOUBLE_EQ(sq[0], 1.0);
    EXPECT_EQ(sq[1], 0.0);
    EXPECT_DOUBLE_EQ(sq[2], -1.0);
    EXPECT_EQ(sq[3], 0.0);
    EXPECT_DOUBLE_EQ(sq[4], 1.0 / 3);
}

TEST(CauchyProduct, Pythagorean)
{
    for (int n : {4, 10, 20}) {
        const auto one = cauchy_product(sin_series(n), sin_series(n)) + cauchy_product(cos_series(n), cos_series(n));
        ASSERT_EQ(one.order(), n);
        EXPECT_NEAR(one[0], 1.0, 1e-15);
        for (int k = 1; k <= n; ++k) EXPECT_NEAR(one[k], 0.0, 1e-15) << k;
    }
}

TEST(CauchyProduct, SquaredSeriesClosedForms)
{
    // cos^2 = 1/2 + cos(2z)/2 and sin^2 = 1/2 - cos(2z)/2.
    const int n = 16;
    const auto cc = cauchy_product(cos_series(n), cos_series(n));
    const auto ss = cauchy_product(sin_series(n), sin_series(n));
    const auto double_angle = cos_series(n);
    for (int k = 1; k <= n; ++k) {
        const double expected = 0.5 * double_angle[k] * std::pow(2.0, k);
        EXPECT_NEAR(cc[k], expected, 1e-15);
        EXPECT_NEAR(ss[k], -expected, 1e-15);
    }
}

TEST(CauchyProduct, IdentityAndCommutativity)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(9), b(9);
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = coef(rng);
        const PowerSeries pa(a), pb(b);
        const auto ab = cauchy_product(pa, pb);
        const auto ba = cauchy_product(pb, pa);
        const auto ia = cauchy_product(PowerSeries::constant(1.0, 8), pa);
        for (int k = 0; k <= 8; ++k) {
            EXPECT_NEAR(ab[k], ba[k], 1e-15);
            EXPECT_EQ(ia[k], pa[k]);
        }
    }
}

TEST(CauchyProduct, TruncatesToShorterOperand)
{
    const auto p = cauchy_product(cos_series(8), sin_series(3));
    EXPECT_EQ(p.order(), 3);
    EXPECT_DOUBLE_EQ(p[3], -1.0 / 6 - 0.5);
    for (double z = -1.0; z <= 1.0; z += 0.05)
        EXPECT_LE(std::abs(p.evaluate(z) - std::sin(z) * std::cos(z)), p.tail_bound());
}

TEST(SeriesCompose, CosOfCos)
{
    const auto cc = series_compose(cos_series(40), cos_series(8));
    ASSERT_EQ(cc.order(), 8);
    EXPECT_NEAR(cc[0], kCos1, 1e-15);
    EXPECT_EQ(cc[1], 0.0);
    EXPECT_NEAR(cc[2], kHalfSin1, 1e-15);
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(cc[k], kCosCos[k], 1e-15) << k;
}

TEST(SeriesCompose, ThreeCosines)
{
    const auto c3 = series_compose(cos_series(40), series_compose(cos_series(40), cos_series(8)));
    EXPECT_NEAR(c3[0], iterate(TrigKind::Cosine, 2, 1.0), 1e-15);
    EXPECT_NEAR(c3[0], 0.85755321584639341574, 1e-15);
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(c3[k], kCos3[k], 1e-14) << k;
}

TEST(SeriesCompose, IdentityInner)
{
    for (const auto& outer : {cos_series(30), sin_series(30)}) {
        const auto same = series_compose(outer, PowerSeries::identity(30));
        ASSERT_EQ(same.order(), 30);
        for (int k = 0; k <= 30; ++k) EXPECT_EQ(same[k], outer[k]) << k;
    }
}

TEST(SeriesCompose, ShortOuterIsRejected)
{
    try {
        series_compose(cos_series(4), cos_series(4));
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("tail estimate"), std::string::npos);
    }
    ComposeOptions divergent;
    divergent.outer_coefficient_bound = [](int) { return 1.0; };  // geometric, radius 1
    EXPECT_THROW(series_compose(cos_series(40), cos_series(4), divergent), std::domain_error);
}

TEST(SeriesCompose, TailBoundHolds)
{
    const auto s = series_compose(sin_series(40), cos_series(6));
    EXPECT_TRUE(std::isfinite(s.tail_bound()));
    for (double z = -1.0; z <= 1.0; z += 0.01)
        EXPECT_LE(std::abs(s.evaluate(z) - std::sin(std::cos(z))), s.tail_bound());
}

TEST(OuterTail, Estimates)
{
    const auto inv_fact = [](int k) { return std::exp(-std::lgamma(k + 1.0)); };
    // sum_{k>3} 1/k! = e - 8/3
    EXPECT_NEAR(outer_tail_estimate(inv_fact, 3, 1.0), std::exp(1.0) - 8.0 / 3.0, 1e-15);
    EXPECT_EQ(outer_tail_estimate(inv_fact, 3, 0.0), 0.0);
    EXPECT_TRUE(std::isinf(outer_tail_estimate([](int) { return 1.0; }, 3, 2.0)));
}

TEST(IteralMaclaurin, OrderOneIsBaseSeries)
{
    const auto c = iteral_maclaurin(TrigKind::Cosine, 1, 4);
    ASSERT_EQ(c.order(), 4);
    EXPECT_EQ(c[0], 1.0);
    EXPECT_EQ(c[2], -0.5);
    EXPECT_DOUBLE_EQ(c[4], 1.0 / 24);
}

TEST(IteralMaclaurin, OrderTwo)
{
    const auto c = iteral_maclaurin(TrigKind::Cosine, 2, 2);
    ASSERT_EQ(c.order(), 2);
    EXPECT_NEAR(c[0], kCos1, 1e-15);
    EXPECT_EQ(c[1], 0.0);
    EXPECT_NEAR(c[2], kHalfSin1, 1e-15);
}

TEST(IteralMaclaurin, AgreesWithNumericalTaylorCoefficients)
{
    const auto c3 = iteral_maclaurin(TrigKind::Cosine, 3, 8);
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(c3[k], kCos3[k], 1e-14) << k;
    const auto s3 = iteral_maclaurin(TrigKind::Sine, 3, 7);
    for (int k = 0; k <= 7; ++k) EXPECT_NEAR(s3[k], kSin3[k], 1e-14) << k;
}

TEST(IteralMaclaurin, ParityStructure)
{
    for (int n = 1; n <= 12; ++n) {
        const auto c = iteral_maclaurin(TrigKind::Cosine, n, 9);
        const auto s = iteral_maclaurin(TrigKind::Sine, n, 9);
        for (int k = 1; k <= 9; k += 2) EXPECT_EQ(c[k], 0.0) << n << " " << k;
        for (int k = 0; k <= 9; k += 2) EXPECT_EQ(s[k], 0.0) << n << " " << k;
        EXPECT_NEAR(s[1], 1.0, 1e-15);
        EXPECT_NEAR(s[1], iteral_derivative(TrigKind::Sine, n, 0.0), 1e-15);
    }
}

TEST(IteralMaclaurin, ConstantTermIsIteralOfOne)
{
    for (int n = 1; n <= 30; ++n)
        EXPECT_NEAR(iteral_maclaurin(TrigKind::Cosine, n, 4)[0], iterate(TrigKind::Cosine, n - 1, 1.0), 1e-14) << n;
    EXPECT_NEAR(iteral_maclaurin(TrigKind::Cosine, 30, 0)[0], kDottie, 1e-4);
}

TEST(IteralMaclaurin, SecondCoefficientMatchesProductFormula)
{
    // Two independent routes to c_2: composition vs. f''(0)/2.
    for (int n = 1; n <= 30; ++n) {
        const double c2 = iteral_maclaurin(TrigKind::Cosine, n, 2)[2];
        EXPECT_NEAR(c2, second_derivative_at_zero(n) / 2, 1e-15) << n;
    }
    for (int n = 2; n < 30; ++n)
        EXPECT_LT(std::abs(iteral_maclaurin(TrigKind::Cosine, n + 1, 2)[2]),
                  std::abs(iteral_maclaurin(TrigKind::Cosine, n, 2)[2]));
}

TEST(IteralMaclaurin, HornerMatchesIteralWithinTailBound)
{
    const auto series = iteral_maclaurin(TrigKind::Cosine, 2, 8);
    ASSERT_TRUE(std::isfinite(series.tail_bound()));
    EXPECT_LT(series.tail_bound(), 0.01);
    for (int i = 0; i < 200; ++i) {
        const double x = -1.0 + 2.0 * i / 199.0;
        EXPECT_LE(std::abs(series.evaluate(x) - iterate(TrigKind::Cosine, 2, x)), series.tail_bound()) << x;
    }
}

TEST(IteralMaclaurin, ComplexHornerWithinTailBound)
{
    const auto series = iteral_maclaurin(TrigKind::Sine, 2, 9);
    for (int i = 0; i < 64; ++i) {
        const std::complex<double> z = std::polar(1.0, 2 * 3.141592653589793 * i / 64);
        EXPECT_LE(std::abs(series.evaluate(z) - iterate(TrigKind::Sine, 2, z)), series.tail_bound());
    }
}

TEST(IteralMaclaurin, CoefficientsVanishWithOrder)
{
    // Not monotone for small n (c_4 and c_6 grow from n = 2 to n = 3), so
    // check the trend: eventually decreasing and small at n = 30.
    for (int p = 1; p <= 3; ++p) {
        double previous = std::abs(iteral_maclaurin(TrigKind::Cosine, 8, 6)[2 * p]);
        for (int n = 9; n <= 30; ++n) {
            const double current = std::abs(iteral_maclaurin(TrigKind::Cosine, n, 6)[2 * p]);
            EXPECT_LT(current, previous) << "p=" << p << " n=" << n;
            previous = current;
        }
        EXPECT_LT(previous, 1e-5);
        EXPECT_LT(previous, 1e-3 * std::abs(iteral_maclaurin(TrigKind::Cosine, 2, 6)[2 * p]));
    }
    const auto c30 = iteral_maclaurin(TrigKind::Cosine, 30, 6);
    EXPECT_NEAR(c30[2], 5.25832365594e-6, 1e-15);
    EXPECT_NEAR(c30[4], 5.29743790345e-7, 1e-16);
    EXPECT_NEAR(c30[6], -1.33992123832e-6, 1e-16);
}

TEST(IteralMaclaurin, Preconditions)
{
    EXPECT_THROW(iteral_maclaurin(TrigKind::Cosine, 0, 4), std::invalid_argument);
    EXPECT_THROW(iteral_maclaurin(TrigKind::Cosine, 2, -1), std::invalid_argument);
}

}  // namespace
}  // namespace iteral
