#include "heightcensus/constants.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/quadratic.hpp"
#include "heightcensus/zeta.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hc;

namespace {

Rational const kEps(1, 1000000000000L);

NumberField quad(long d) { return make_field(quadratic_generator(Integer(d))); }

// plain partial sums with a crude tail allowance, in long double
long double zeta_series(int s)
{
    long double z = 0;
    for (long k = 200000; k >= 1; --k)
        z += std::pow((long double)k, -s);
    return z + std::pow(200000.0L, 1 - s) / (s - 1);
}

long double l5_series(int s)
{
    long double z = 0;
    int chi[5] = {0, 1, -1, -1, 1};
    for (long k = 200000; k >= 1; --k)
        z += chi[k % 5] * std::pow((long double)k, -s);
    return z;
}

} // namespace

TEST(Constants, VolumeClosedForms)
{
    EXPECT_EQ(v_real(1), 1);
    EXPECT_EQ(v_real(2), 1);
    EXPECT_EQ(v_real(3), Rational(8, 9));
    // l = 2: 6^2 * 2^3/3^4 * 4^1/5^2
    EXPECT_EQ(v_real(5), Rational(128, 225)); // 1152/2025
    EXPECT_EQ(v_complex(1), 1);
    EXPECT_EQ(v_complex(2), Rational(3, 4));
    EXPECT_EQ(v_complex(3), Rational(4, 9));
    EXPECT_THROW(v_real(0), InvalidInput);
}

TEST(Constants, SchanuelOverQ)
{
    for (int n = 1; n <= 20; ++n) {
        Interval S = schanuel(NumberField(), n, kEps).to_interval(256);
        CertifiedReal prod = CertifiedReal::from(S * riemann_zeta(n + 1, 256));
        EXPECT_TRUE(prod.contains(Rational(ipow(2, n)))) << n;
        EXPECT_LT(prod.width(), Rational(1, 1000000000)) << n;
    }
    EXPECT_NEAR(schanuel(NumberField(), 1, kEps).mid_double(), 12 / (M_PI * M_PI), 1e-12);
}

TEST(Constants, SchanuelGaussian)
{
    CertifiedReal S = schanuel(quad(-4), 2, kEps);
    CertifiedReal prod = CertifiedReal::from(S.to_interval(256) * riemann_zeta(3, 256));
    EXPECT_TRUE(prod.contains(8));
    EXPECT_LT(prod.width(), Rational(1, 1000000000));
}

TEST(Constants, SchanuelRealQuadraticAgainstSeries)
{
    // h = 1, R = log((1 + sqrt5)/2), w = 2, r = 2
    long double R = std::log((1 + std::sqrt(5.0L)) / 2);
    long double zk = zeta_series(3) * l5_series(3);
    long double want = R / (2 * zk) * std::pow(4 / std::sqrt(5.0L), 3) * 3;
    EXPECT_NEAR(schanuel(quad(5), 2, kEps).mid_double(), (double)want, 1e-9);
    EXPECT_NEAR(predicted_relative_slope(quad(5), 2, kEps).mid_double(), 2 * (double)want, 2e-9);
}

TEST(Constants, Slopes)
{
    EXPECT_NEAR(mv_slope(1, kEps).mid_double(), 12 / (M_PI * M_PI), 1e-12);
    EXPECT_NEAR(mv_slope(2, kEps).mid_double(), 8 / 1.2020569031595942, 1e-12);
    EXPECT_NEAR(mv_slope(3, kEps).mid_double(), 64 / (3 * M_PI * M_PI * M_PI * M_PI / 90), 1e-11);
    EXPECT_NEAR(predicted_relative_slope(quad(-4), 2, kEps).mid_double(), 12 / 1.2020569031595942, 1e-11);
    EXPECT_TRUE(predicted_relative_slope(NumberField(), 2, kEps).intersects(mv_slope(2, kEps)));
}

TEST(Constants, MahlerDoubleAgainstOracle)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int t = 0; t < 300; ++t) {
        int d = 2 + t % 3;
        std::vector<Integer> co(d + 1);
        std::vector<double> dc(d + 1);
        for (int i = 0; i <= d; ++i) {
            co[i] = c(rng);
            dc[i] = co[i].get_d();
        }
        if (co[d] == 0)
            co[d] = dc[d] = 1;
        double m = mahler_double(dc);
        EXPECT_NEAR(m, oracle::mahler_durand_kerner(IntPolynomial(co)), 1e-7 * m);
    }
    // complex: (x - 2i)(x - i/3) = x^2 - (7/3) i x - 2/3 has M = 2
    EXPECT_NEAR(mahler_double_complex({-2.0 / 3, 0, 1}, {0, -7.0 / 3, 0}), 2.0, 1e-12);
}

TEST(Constants, MonteCarloVolumes)
{
    struct Case {
        int n;
        Place p;
        Rational v;
    };
    for (auto const& [n, p, v] : {Case{1, Place::real, v_real(1)}, Case{2, Place::real, v_real(2)},
                                  Case{3, Place::real, v_real(3)}, Case{1, Place::complex, v_complex(1)},
                                  Case{2, Place::complex, v_complex(2)}}) {
        VolumeEstimate e = mc_volume(n, p, 2000000, 2024);
        EXPECT_LE(std::fabs(e.estimate - v.get_d()), 3 * e.standard_error) << n;
        EXPECT_GT(e.hits, 0);
    }
}

TEST(Constants, MonteCarloDeterminism)
{
    VolumeEstimate a = mc_volume(2, Place::real, 300000, 5), b = mc_volume(2, Place::real, 300000, 5, 3);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_NE(mc_volume(2, Place::real, 300000, 6).hits, a.hits);
    EXPECT_THROW(mc_volume(5, Place::real, 10, 1), InvalidInput);
}

TEST(Constants, LeadingConstantPartial)
{
    Rational eps(1, 1000000000);
    EXPECT_TRUE(leading_constant_partial(11, 2, eps).terms.empty());
    EXPECT_EQ(leading_constant_partial(11, 2, eps).partial_sum.hi, 0);
    auto a = leading_constant_partial(11, 100, eps);
    auto b = leading_constant_partial(11, 200, eps);
    ASSERT_FALSE(a.terms.empty());
    EXPECT_EQ(a.terms[0].first, -3);
    for (auto const& [D, t] : b.terms) {
        EXPECT_GT(t.lo, 0) << D;
        if (D != -3)
            EXPECT_LT(t.hi, a.terms[0].second.lo) << D;
    }
    EXPECT_LT(a.partial_sum.hi, b.partial_sum.lo);
    EXPECT_LT((b.partial_sum.mid() - a.partial_sum.mid()) / b.partial_sum.mid(), Rational(1, 100000));
    EXPECT_THROW(leading_constant_partial(1, 10, eps), InvalidInput);
}
