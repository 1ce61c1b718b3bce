#include "heightcensus/enumerate.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/heights.hpp"
#include "heightcensus/quadratic.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hc;

namespace {

IntPolynomial P(char const* s) { return parse_polynomial(s); }

NumberField Qi() { return make_field(P("1,0,1")); }
NumberField Qsqrt2() { return make_field(P("-2,0,1")); }
NumberField Qsqrt5() { return make_field(P("-1,-1,1")); } // theta = golden ratio or its conjugate

bool near(CertifiedReal const& c, double v, double tol) { return std::fabs(c.mid_double() - v) <= tol; }

FieldElement el(NumberField const& K, Rational a, Rational b) { return K.element(RatPolynomial(std::vector<Rational>{a, b})); }

/* sqrt(2) inside Q(sqrt 2) is theta; in Q(sqrt5) sqrt5 = 2 theta - 1 */
KPoly monic_quadratic(NumberField const& K, FieldElement const& b, FieldElement const& c)
{
    return KPoly(K, std::vector<FieldElement>{c, b, K.one()});
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST(Heights, ExampleValues)
{
    HeightValue h = height(rational_number(Rational(3, 2)));
    ASSERT_TRUE(h.value.is_exact());
    EXPECT_EQ(h.value.lo, 3);

    HeightValue r2 = height(make_algebraic(P("-2,0,1"), 1));
    EXPECT_TRUE(r2.exact());
    EXPECT_TRUE(near(r2.value, std::sqrt(2.0), 1e-15));
    EXPECT_LT(r2.value.width(), Rational(1, ipow(10, 25)));

    HeightValue phi = height(make_algebraic(P("-1,-1,1"), 1));
    EXPECT_FALSE(phi.exact());
    EXPECT_TRUE(near(phi.value, std::sqrt((1 + std::sqrt(5.0)) / 2), 1e-15));
    EXPECT_GT(phi.value.lo, Rational(127201, 100000));
    EXPECT_LT(phi.value.hi, Rational(127203, 100000));

    HeightValue z8 = height(make_algebraic(P("1,0,0,0,1"), 0));
    EXPECT_TRUE(z8.value.is_exact());
    EXPECT_EQ(z8.value.lo, 1);

    EXPECT_THROW(make_algebraic(P("-1,0,1"), 0), InvalidInput);
    EXPECT_THROW(make_algebraic(P("-2,0,1"), 2), InvalidInput);
}

TEST(Heights, NaiveHeightExamples)
{
    EXPECT_EQ(naive_height(make_algebraic(P("-2,0,1"), 0)), 2);
    EXPECT_EQ(naive_height(rational_number(Rational(3, 2))), 3);
    EXPECT_EQ(naive_height(make_algebraic(P("1,0,0,0,1"), 2)), 1);
}

TEST(Heights, SandwichOnEnumeratedNumbers)
{
    EXPECT_TRUE(check_height_sandwich(make_algebraic(P("-2,0,1"), 0)));
    EXPECT_TRUE(check_height_sandwich(make_algebraic(P("1,0,0,0,1"), 0)));
    for (auto [d, X] : {std::pair{2, Rational(2)}, std::pair{3, Rational(6, 5)}, std::pair{4, Rational(11, 10)}}) {
        long n = 0;
        enumerate_polynomials(d, qpow(X, d), EnumConfig{}, [&](int, IntPolynomial const& D) {
            EXPECT_TRUE(check_height_sandwich({D, 0})) << to_csv(D);
            ++n;
        });
        EXPECT_GT(n, 0);
    }
}

TEST(Heights, KroneckerHeightOne)
{
    // H = 1 exactly for the cyclotomic minimal polynomials and > 1 otherwise
    enumerate_polynomials(4, Rational(3), EnumConfig{}, [&](int, IntPolynomial const& D) {
        bool cyc = strip_cyclotomic(D).remainder.degree() == 0;
        HeightValue h = height_of_polynomial(D, Rational(1, 1000000));
        EXPECT_GE(h.value.lo, 1);
        if (cyc)
            EXPECT_EQ(h.value.lo, 1) << to_csv(D);
        else
            EXPECT_GT(h.value.lo, 1) << to_csv(D);
    });
}

TEST(Heights, M0Examples)
{
    Rational eps(1, ipow(10, 20));
    NumberField K = Qi();
    KPoly f1 = monic_quadratic(K, K.zero(), -K.theta());
    CertifiedReal a = m0(f1, eps), b = m0_adelic(f1, eps);
    EXPECT_TRUE(a.contains(1));
    EXPECT_TRUE(b.contains(1));

    NumberField L = Qsqrt2();
    KPoly f2 = monic_quadratic(L, L.zero(), L.element(Rational(-2)));
    EXPECT_TRUE(m0(f2, eps).contains(2));
    EXPECT_TRUE(m0_adelic(f2, eps).contains(2));

    // x^2 - (3/sqrt2) x + 1 with 3/sqrt2 = 3 theta / 2
    KPoly f3 = monic_quadratic(L, el(L, 0, Rational(-3, 2)), L.one());
    EXPECT_TRUE(m0(f3, eps).contains(2));
    EXPECT_TRUE(m0_adelic(f3, eps).contains(2));
    EXPECT_EQ(ideal_norm(L, f3.coeffs()), Rational(1, 2));

    EXPECT_THROW(m0_adelic(KPoly(make_field(P("-2,0,0,1")), IntPolynomial{-1, 0, 1}), eps), InvalidInput);
}

TEST(Heights, IdealNormOfPrincipalIdeals)
{
    std::mt19937_64 rng(11);
    for (auto const& K : {Qi(), Qsqrt2(), Qsqrt5(), make_field(P("5,0,1")), make_field(P("3,-1,2"))})
        for (int i = 0; i < 200; ++i) {
            FieldElement a = el(K, random_rational(rng), random_rational(rng));
            if (a.is_zero())
                continue;
            EXPECT_EQ(ideal_norm(K, {a}), Rational(abs(norm(a)))) << to_string(a);
            // (a, a) and (a, 2a) generate the same ideal
            EXPECT_EQ(ideal_norm(K, {a, K.element(Rational(2)) * a}), Rational(abs(norm(a))));
        }
    // (2, 1 + sqrt(-5)) is the non-principal prime above 2
    NumberField K = make_field(P("5,0,1"));
    EXPECT_EQ(ideal_norm(K, {K.element(Rational(2)), el(K, 1, 1)}), 2);
}

TEST(Heights, DualM0RoutesAgree)
{
    std::mt19937_64 rng(2024);
    Rational eps(1, ipow(10, 20));
    for (auto const& K : {Qi(), Qsqrt2(), Qsqrt5()}) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement b = el(K, random_rational(rng), random_rational(rng));
            FieldElement c = el(K, random_rational(rng), random_rational(rng));
            if (c.is_zero())
                continue;
            KPoly f = monic_quadratic(K, b, c);
            CertifiedReal x = m0(f, eps), y = m0_adelic(f, eps);
            ASSERT_TRUE(x.intersects(y)) << to_string(f);
            Rational rel = abs(x.mid() - y.mid()) / y.mid();
            EXPECT_LT(rel, Rational(1, ipow(10, 10)));
        }
    }
}

TEST(Heights, M0MultiplicativeAndIrreduciblePower)
{
    std::mt19937_64 rng(7);
    Rational eps(1, ipow(10, 20));
    NumberField K = Qsqrt5();
    for (int i = 0; i < 60; ++i) {
        KPoly g = monic_quadratic(K, el(K, random_rational(rng), random_rational(rng)),
                                  el(K, random_rational(rng), random_rational(rng)));
        KPoly h(K, std::vector<FieldElement>{el(K, random_rational(rng), random_rational(rng)), K.one()});
        if (g[0].is_zero() || h[0].is_zero())
            continue;
        CertifiedReal a = m0(g, eps), b = m0(h, eps), ab = m0(g * h, eps);
        Interval prod = a.to_interval(256) * b.to_interval(256);
        EXPECT_TRUE(CertifiedReal::from(prod).intersects(ab)) << to_string(g) << " * " << to_string(h);
        if (is_irreducible_over(g)) {
            // M0(g) = H(beta)^2 for a root beta
            IntPolynomial D = factor_over_rationals(clear_denominators(norm(g))).factors[0].first;
            HeightValue hb = height_of_polynomial(D, eps);
            Interval sq = hb.value.to_interval(256) * hb.value.to_interval(256);
            EXPECT_TRUE(CertifiedReal::from(sq).intersects(a)) << to_string(g);
        }
    }
}

TEST(Heights, ProjectiveHeights)
{
    Rational eps(1, ipow(10, 20));
    NumberField K = Qi();
    EXPECT_TRUE(height_projective({K.one(), K.theta()}, eps).contains(1));
    EXPECT_TRUE(height_projective({K.element(Rational(2)), el(K, 0, 2)}, eps).contains(1));
    NumberField L = Qsqrt2();
    CertifiedReal h = height_projective({L.one(), L.theta()}, eps);
    EXPECT_TRUE(near(h, std::sqrt(2.0), 1e-15));
    CertifiedReal hr = height(make_algebraic(P("-2,0,1"), 1)).value;
    EXPECT_TRUE(h.intersects(hr));
    EXPECT_THROW(height_projective({K.zero(), K.zero()}, eps), InvalidInput);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        std::vector<FieldElement> pt;
        for (int j = 0; j < 3; ++j)
            pt.push_back(el(L, random_rational(rng), random_rational(rng)));
        if (pt[0].is_zero())
            continue;
        FieldElement s = el(L, random_rational(rng), random_rational(rng));
        if (s.is_zero())
            continue;
        std::vector<FieldElement> sp;
        for (auto const& x : pt)
            sp.push_back(s * x);
        EXPECT_TRUE(height_projective(pt, eps).intersects(height_projective(sp, eps)));
    }
    // over Q: (p : q) in lowest terms has height max(|p|, |q|)
    NumberField Q;
    EXPECT_EQ(height_projective({Q.element(Rational(4, 6)), Q.one()}, eps).lo, 3);
}

TEST(Heights, DeltaAndPiExamples)
{
    MinimalGenerator a = delta_exact(Qi(), Rational(100));
    EXPECT_EQ(a.delta.value.lo, 1);
    EXPECT_EQ(a.witness.minpoly, P("1,0,1"));

    MinimalGenerator b = delta_exact(make_field(P("-5,0,1")), Rational(100));
    EXPECT_EQ(b.witness.minpoly, P("-1,-1,1"));
    EXPECT_EQ(b.witness.root_index, 1);
    EXPECT_TRUE(near(b.delta.value, std::sqrt((1 + std::sqrt(5.0)) / 2), 1e-15));

    MinimalGenerator c = delta_exact(make_field(P("-2,0,1")), Rational(100));
    EXPECT_EQ(c.witness.minpoly, P("-2,0,1"));
    EXPECT_EQ(*c.delta.mahler, 2);

    // Q(sqrt -5): imaginary quadratics have integral M = max(a, c), and a, c <= 2
    // cannot reach discriminant -20, so the minimum is M = 3
    MinimalGenerator d = delta_exact(make_field(P("5,0,1")), Rational(100));
    EXPECT_EQ(*d.delta.mahler, 3);
    EXPECT_EQ(d.witness.minpoly, P("2,-2,3"));

    EXPECT_THROW(delta_exact(make_field(P("-2,0,1")), Rational(1)), CapExceeded);

    EXPECT_EQ(pi_exact(Qi(), Integer(100)).pi, 1);
    EXPECT_EQ(pi_exact(make_field(P("-5,0,1")), Integer(100)).pi, 1);
    auto p2 = pi_exact(make_field(P("-2,0,1")), Integer(100));
    EXPECT_EQ(p2.pi, 2);
    EXPECT_EQ(p2.witness.minpoly, P("-2,0,1"));
}

TEST(Heights, DeltaAgainstBruteForce)
{
    // min over quadratics with |coeffs| <= 12 of M, by double closed forms
    // grouped by the squarefree kernel of the discriminant
    auto kernel = [](long v) {
        long s = v < 0 ? -1 : 1, a = std::labs(v);
        for (long p = 2; p * p <= a; ++p)
            while (a % (p * p) == 0)
                a /= p * p;
        return s * a;
    };
    auto mahler2 = [](long a, long b, long c) {
        double dd = double(b) * b - 4.0 * a * c;
        if (dd < 0)
            return std::max<double>(a, c);
        double r1 = (-b + std::sqrt(dd)) / (2.0 * a), r2 = (-b - std::sqrt(dd)) / (2.0 * a);
        return a * std::max(1.0, std::fabs(r1)) * std::max(1.0, std::fabs(r2));
    };
    for (long m : {-1L, -2L, -3L, -5L, -7L, 2L, 3L, 5L, 6L, 7L, 13L}) {
        double best = 1e9;
        for (long a = 1; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b)
                for (long c = -12; c <= 12; ++c) {
                    long dd = b * b - 4 * a * c;
                    if (dd == 0 || c == 0)
                        continue;
                    long r = (long)std::llround(std::sqrt((double)std::labs(dd)));
                    if (dd > 0 && r * r == dd)
                        continue;
                    if (kernel(dd) == m)
                        best = std::min(best, mahler2(a, b, c));
                }
        IntPolynomial g = m % 4 == 1 || m % 4 == -3 ? IntPolynomial{(1 - m) / 4, -1, 1} : IntPolynomial{-m, 0, 1};
        MinimalGenerator mg = delta_exact(make_field(g), Rational(1000));
        EXPECT_NEAR(mg.delta.value.mid_double(), std::sqrt(best), 1e-12) << m;
    }
}

TEST(Heights, Silverman)
{
    SilvermanCheck a = check_silverman(Qi());
    EXPECT_TRUE(a.holds);
    EXPECT_TRUE(a.equality);
    SilvermanCheck b = check_silverman(make_field(P("-5,0,1")));
    EXPECT_TRUE(b.holds);
    EXPECT_FALSE(b.equality);
    EXPECT_TRUE(near(b.rhs, 1.05737, 1e-5));
    SilvermanCheck c = check_silverman(make_field(P("5,0,1")));
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(near(c.rhs, 1.49535, 1e-5));
    EXPECT_TRUE(near(c.lhs, std::sqrt(3.0), 1e-12));
    EXPECT_FALSE(c.equality);
    for (long D : {-3L, -4L, -7L, -8L, 5L, 8L, 12L, 13L, -15L, 17L, -20L, 21L}) {
        SilvermanCheck s = check_silverman(make_field(quadratic_generator(D)));
        EXPECT_TRUE(s.holds) << D;
        EXPECT_TRUE(s.lhs.hi >= s.rhs.lo) << D;
    }
}

TEST(Heights, PrimitivePointBound)
{
    Rational eps(1, ipow(10, 12));
    for (auto const& K : {Qi(), Qsqrt2(), Qsqrt5()}) {
        MinimalGenerator mg = delta_exact(K, Rational(100));
        std::mt19937_64 rng(3);
        for (int i = 0; i < 50; ++i) {
            std::vector<FieldElement> pt{K.one(), el(K, random_rational(rng), random_rational(rng)),
                                         el(K, random_rational(rng), random_rational(rng))};
            if (pt[1].is_rational() && pt[2].is_rational())
                continue;
            EXPECT_TRUE(check_primitive_point_bound(pt, mg.delta));
        }
    }
}
