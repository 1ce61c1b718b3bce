#include "heightcensus/census.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/quadratic.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace hc;

namespace {

IntPolynomial P(char const* s) { return parse_polynomial(s); }

NumberField quad(long d) { return make_field(quadratic_generator(Integer(d))); }

std::vector<long> discs(std::vector<NumberField> const& v)
{
    std::vector<long> out;
    for (auto const& K : v)
        out.push_back(field_discriminant(K).get_si());
    return out;
}

struct OracleCensus {
    long long Z = 0, Zbar = 0, sum_ZK = 0, sum_ZbarK = 0;
};

// quartic census from double roots, brute-force factor search and the classical resolvent
OracleCensus oracle_quartic_census(double B)
{
    OracleCensus o;
    int lim[5] = {(int)std::floor(B), 4 * (int)std::floor(B), 6 * (int)std::floor(B), 4 * (int)std::floor(B),
                  (int)std::floor(B)};
    for (int a4 = 1; a4 <= lim[0]; ++a4)
        for (int a3 = -lim[1]; a3 <= lim[1]; ++a3)
            for (int a2 = -lim[2]; a2 <= lim[2]; ++a2)
                for (int a1 = -lim[3]; a1 <= lim[3]; ++a1)
                    for (int a0 = -lim[4]; a0 <= lim[4]; ++a0) {
                        if (a0 == 0 || std::gcd(std::gcd(std::gcd(a4, a3), std::gcd(a2, a1)), a0) != 1)
                            continue;
                        IntPolynomial D(std::vector<Integer>{a0, a1, a2, a3, a4});
                        double m = oracle::mahler_durand_kerner(D);
                        EXPECT_GT(std::fabs(m - B), 1e-9 * B) << to_csv(D);
                        if (m > B || oracle::has_factor_bruteforce(D))
                            continue;
                        int k = oracle::resolvent_rational_roots(D);
                        if (k == 0)
                            continue;
                        int fields = k == 3 ? 3 : 1;
                        o.Z += 4;
                        o.sum_ZK += 4 * fields;
                        if (fields > 1) {
                            o.Zbar += 4;
                            o.sum_ZbarK += 4 * fields;
                        }
                    }
    return o;
}

} // namespace

TEST(Census, SmallExamples)
{
    auto r1 = count_Z(1, 2, 1);
    EXPECT_EQ(r1.Z, 6);
    EXPECT_EQ(r1.Zbar, 0);
    EXPECT_EQ(r1.residual, 0);

    auto r = count_Z(2, 2, 1);
    EXPECT_EQ(r.Z, 16);
    EXPECT_EQ(r.Zbar, 8);
    EXPECT_EQ(r.sum_ZK, 32);
    EXPECT_EQ(r.sum_ZbarK, 24);
    EXPECT_EQ(r.residual, 0);
    EXPECT_TRUE(r.inequality_holds);
    // Phi5, Phi10 -> Q(sqrt5); Phi8 -> Q(i), Q(sqrt2), Q(sqrt-2); Phi12 -> Q(i), Q(sqrt-3), Q(sqrt3)
    std::vector<std::tuple<long, long long, long long>> want{{-3, 4, 4}, {-4, 8, 8}, {5, 8, 0},
                                                             {-8, 4, 4}, {8, 4, 4},  {12, 4, 4}};
    ASSERT_EQ(r.fields.size(), want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(r.fields[i].disc, std::get<0>(want[i]));
        EXPECT_EQ(r.fields[i].Z_K, std::get<1>(want[i]));
        EXPECT_EQ(r.fields[i].Zbar_K, std::get<2>(want[i]));
    }
}

TEST(Census, NumberCountsAgainstOracles)
{
    EXPECT_EQ(count_numbers(1, 1), 3);
    EXPECT_EQ(count_numbers(2, 1), 6);
    EXPECT_EQ(count_numbers(4, 1), 16);
    // degree 1: p/q in lowest terms with max(|p|, q) <= X
    long long pairs = 0;
    for (int q = 1; q <= 60; ++q)
        for (int p = -60; p <= 60; ++p)
            if (std::gcd(p, q) == 1)
                ++pairs;
    EXPECT_EQ(count_numbers(1, 60), pairs);
    // degree 2 at X = 7/3 from double roots
    double B = std::pow(7.0 / 3, 2);
    long long quad_count = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = -11; b <= 11; ++b)
            for (int c = -5; c <= 5; ++c) {
                if (c == 0 || std::gcd(std::gcd(a, b), c) != 1)
                    continue;
                IntPolynomial D(std::vector<Integer>{c, b, a});
                if (oracle::has_factor_bruteforce(D))
                    continue;
                double m = oracle::mahler_durand_kerner(D);
                ASSERT_GT(std::fabs(m - B), 1e-9);
                if (m <= B)
                    quad_count += 2;
            }
    EXPECT_EQ(count_numbers(2, Rational(7, 3)), quad_count);
}

TEST(Census, QuarticCensusAgainstOracle)
{
    Rational X(6, 5);
    auto r = count_Z(2, 2, X);
    auto o = oracle_quartic_census(std::pow(1.2, 4));
    EXPECT_EQ(r.Z, o.Z);
    EXPECT_EQ(r.Zbar, o.Zbar);
    EXPECT_EQ(r.sum_ZK, o.sum_ZK);
    EXPECT_EQ(r.sum_ZbarK, o.sum_ZbarK);
    EXPECT_EQ(r.residual, 0);
    EXPECT_TRUE(r.inequality_holds);
    EXPECT_GT(r.Z, 16);
}

TEST(Census, WorkerIndependence)
{
    CensusConfig c1, c3;
    c1.tallies = c3.tallies = true;
    c3.workers = 3;
    Rational X(6, 5);
    EXPECT_EQ(census_csv(count_Z(2, 2, X, c1)), census_csv(count_Z(2, 2, X, c3)));
    EXPECT_EQ(census_csv(count_Z(1, 3, Rational(3, 2), c1)), census_csv(count_Z(1, 3, Rational(3, 2), c3)));
}

TEST(Census, SubfieldExamples)
{
    EXPECT_EQ(discs(subfields_of_degree(P("-2,0,0,0,1"), 2)), std::vector<long>{8});
    EXPECT_TRUE(subfields_of_degree(P("-1,-1,0,0,1"), 2).empty());
    EXPECT_EQ(discs(subfields_of_degree(P("1,0,0,0,1"), 2)), (std::vector<long>{-4, -8, 8}));
    // Q(zeta_7) has the single quadratic subfield Q(sqrt-7)
    EXPECT_EQ(discs(subfields_of_degree(P("1,1,1,1,1,1,1"), 2)), std::vector<long>{-7});
    EXPECT_EQ(subfields_of_degree(P("-2,0,0,0,1"), 1).size(), 1u);
    EXPECT_THROW(subfields_of_degree(P("-2,0,0,1"), 2), InvalidInput);
    EXPECT_THROW(subfields_of_degree(P("1,1,1,1,1,1,1"), 3), CapExceeded);
}

TEST(Census, ResolventExamples)
{
    EXPECT_EQ(quartic_resolvent_cubic(P("-2,0,0,0,1")), P("0,8,0,1"));
    EXPECT_EQ(quartic_resolvent_cubic(P("-1,-1,0,0,1")), P("-1,4,0,1"));
    EXPECT_EQ(quartic_resolvent_cubic(P("1,0,0,0,1")), P("0,-4,0,1"));
    EXPECT_TRUE(quartic_subfield_resolvent(P("-2,0,0,0,1")));
    EXPECT_FALSE(quartic_subfield_resolvent(P("-1,-1,0,0,1")));
    EXPECT_TRUE(quartic_subfield_resolvent(P("1,0,0,0,1")));
}

TEST(Census, ResolventOracleAgreement)
{
    int checked = 0;
    for (int a4 = 1; a4 <= 2; ++a4)
        for (int a3 = -2; a3 <= 2; ++a3)
            for (int a2 = -3; a2 <= 3; ++a2)
                for (int a1 = -3; a1 <= 3; ++a1)
                    for (int a0 = -3; a0 <= 3; ++a0) {
                        if (a0 == 0 || std::gcd(std::gcd(std::gcd(a4, a3), std::gcd(a2, a1)), a0) != 1)
                            continue;
                        IntPolynomial D(std::vector<Integer>{a0, a1, a2, a3, a4});
                        if (!is_irreducible(D))
                            continue;
                        auto subs = subfields_of_degree(D, 2);
                        int k = oracle::resolvent_rational_roots(D);
                        EXPECT_EQ(subs.size(), k == 0 ? 0u : k == 3 ? 3u : 1u) << to_csv(D);
                        EXPECT_EQ(quartic_subfield_resolvent(D), !subs.empty()) << to_csv(D);
                        ++checked;
                    }
    EXPECT_GT(checked, 2000);
}

TEST(Census, ClassifyExamples)
{
    NumberField Qi = quad(-4);
    FieldElement i = Qi.theta();
    EXPECT_EQ(classify_over_K(KPoly(Qi, {-i, Qi.zero(), Qi.one()}), 2, 1), ClassTag::cp);
    KPoly red(Qi, {Qi.element(Rational(-2)), Rational(-3) * i, Qi.one()});
    EXPECT_EQ(classify_over_K(red, 2, 2), ClassTag::reducible);
    EXPECT_EQ(classify_over_K(KPoly(Qi, {-i, Qi.one()}), 2, 1), ClassTag::lower_degree);
    EXPECT_EQ(classify_over_K(KPoly(Qi, P("1,0,1")), 2, 1), ClassTag::not_primitive);
    EXPECT_THROW(classify_over_K(red, 2, 1), InvalidInput);

    NumberField C = make_field(P("-2,0,0,1"));
    FieldElement t = C.theta();
    KPoly f(C, {t * t, t, C.one()});
    EXPECT_EQ(classify_over_K(f, 2, 2), ClassTag::ncp);
    EXPECT_TRUE(verify_ncp_structure(f));
    EXPECT_THROW(verify_ncp_structure(KPoly(Qi, {-i, Qi.zero(), Qi.one()})), InvalidInput);
}

TEST(Census, TalliesAtHeightOne)
{
    // monic f over K with M0(f) <= 1 have roots in {0} and the roots of unity
    std::map<long, ClassTally> want;
    want[-3] = {12, 4, 20, 0, 2};
    want[-4] = {12, 2, 8, 0, 4};
    want[5] = {12, 0, 0, 0, 4};
    for (auto const& [d, w] : want) {
        long long visited = 0;
        ClassTally t = classify_all_over_K(quad(d), 2, 1, {}, [&](KPoly const& f, ClassTag tag) {
            ++visited;
            EXPECT_EQ(classify_over_K(f, 2, 1), tag);
        });
        EXPECT_EQ(t, w) << d;
        EXPECT_EQ(t.total(), visited);
    }
}

TEST(Census, QuadraticFieldsHaveNoNcp)
{
    for (long d : {-4, -3, 5, 8, -7}) {
        ClassTally t = classify_all_over_K(quad(d), 2, Rational(3, 2), {});
        EXPECT_EQ(t.ncp, 0) << d;
        EXPECT_GT(t.cp, 0) << d;
    }
}

TEST(Census, CpCountExamples)
{
    struct Row {
        long d;
        long long z, cp;
    };
    for (auto const& [d, z, cp] : {Row{-4, 8, 4}, Row{5, 8, 4}, Row{8, 4, 2}}) {
        auto c = verify_lemma61(quad(d), 2, 1);
        EXPECT_EQ(c.Z_K, z) << d;
        EXPECT_EQ(c.cp_count, cp) << d;
        EXPECT_EQ(c.tally_cp, cp) << d;
        EXPECT_TRUE(c.ok) << d;
    }
    for (long d : {-4, 8, 5}) {
        auto c = verify_lemma61(quad(d), 2, Rational(6, 5));
        EXPECT_TRUE(c.ok) << d;
        EXPECT_EQ(c.Z_K, 2 * c.cp_count);
    }
}

TEST(Census, RelativeCounts)
{
    EXPECT_EQ(count_relative(quad(-4), 2, 1), 8);
    EXPECT_EQ(count_relative(quad(8), 2, 1), 4);
    EXPECT_EQ(count_relative(quad(5), 2, 1), 8);
    // over a quadratic K every counted beta has degree 4 here, so the count is Z_K
    for (long d : {-4, 5}) {
        auto L = verify_lemma61(quad(d), 2, Rational(6, 5));
        EXPECT_EQ(count_relative(quad(d), 2, Rational(6, 5)), L.Z_K) << d;
    }
}

TEST(Census, ExplicitUpperBound)
{
    auto r = count_Z(2, 2, 1);
    auto b = verify_th4_bound(r);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.c, ipow(2, 79));
    EXPECT_EQ(b.margin, Rational(ipow(2, 79)) - 16);
    EXPECT_TRUE(verify_th4_bound(count_Z(1, 2, 3)).holds);
}

TEST(Census, CsvAndErrors)
{
    CensusConfig c;
    c.tallies = true;
    std::string csv = census_csv(count_Z(2, 2, 1, c));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "e,n,X,Z,Zbar,field_disc,Z_K,Zbar_K,cp,red,ncp,lower,not_primitive");
    EXPECT_NE(csv.find("\n2,2,1,16,8,-4,8,8,4,8,0,2,12\n"), std::string::npos);
    EXPECT_EQ(census_csv(count_Z(1, 2, 1), false), "1,2,1,6,0,1,6,0,,,,,\n");
    EXPECT_THROW(count_Z(3, 2, 1), CapExceeded);
    EXPECT_THROW(count_Z(2, 1, 1), InvalidInput);
    EXPECT_THROW(count_Z(2, 4, 1), CapExceeded);
    EXPECT_THROW(count_Z(1, 2, Rational(1, 2)), InvalidInput);
    CensusConfig tiny;
    tiny.candidate_cap = 100;
    EXPECT_THROW(count_Z(2, 2, 2, tiny), BoxRefused);
}
