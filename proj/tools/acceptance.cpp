// Runs the fifteen acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [--workers N] [--only k[,k...]]

#include "heightcensus/census.hpp"
#include "heightcensus/constants.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/heights.hpp"
#include "heightcensus/quadratic.hpp"
#include "heightcensus/zeta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hc;

namespace {

int g_workers = 1;
std::vector<CensusReport> g_censuses; // everything counted in criteria 1-4

NumberField quad(long d) { return make_field(quadratic_generator(Integer(d))); }

std::string str(Rational const& q) { return to_string(q); }

std::string fixed(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

CensusConfig census_config(bool tallies = false)
{
    CensusConfig c;
    c.workers = g_workers;
    c.tallies = tallies;
    return c;
}

CensusReport census(int e, int n, Rational const& X)
{
    CensusReport r = count_Z(e, n, X, census_config());
    g_censuses.push_back(r);
    return r;
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool c, std::string const& what)
    {
        if (!c) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

// 1: degree one, against a direct count of reduced fractions
void check_rational_slope(Outcome& o)
{
    long N = 1000;
    long long pairs = 0;
    for (long q = 1; q <= N; ++q)
        for (long p = -N; p <= N; ++p)
            pairs += std::gcd(p, q) == 1;
    CensusReport r = census(1, 1, N);
    double predicted = 12 / (M_PI * M_PI) * 1e6;
    double rel = std::fabs(r.Z - predicted) / predicted;
    o.detail << "Z(1,1,1000) = " << r.Z << ", gcd pairs " << pairs << ", prediction " << fixed(predicted, 0)
             << ", relative gap " << fixed(rel);
    o.require(r.Z == pairs, "census disagrees with the gcd-pair count");
    o.require(rel < 0.01, "outside 1%");
}

// 2: degree two at X = 10
void check_quadratic_slope(Outcome& o)
{
    CensusReport r = census(1, 2, 10);
    double ratio = r.Z / 1e6;
    double predicted = mv_slope(2, Rational(1, 1000000000)).mid_double();
    double rel = std::fabs(ratio - predicted) / predicted;
    o.detail << "Z(1,2,10)/10^6 = " << fixed(ratio) << ", prediction " << fixed(predicted) << ", relative gap "
             << fixed(rel);
    o.require(rel < 0.12, "outside 12%");
}

// 3: roots of unity and zero
void check_cyclotomic(Outcome& o)
{
    CensusReport a = census(1, 2, 1);
    CensusReport b = census(2, 2, 1);
    o.detail << "Z(1,2,1) = " << a.Z << ", Z(2,2,1) = " << b.Z << ", Zbar = " << b.Zbar << ", sum Z_K = " << b.sum_ZK
             << ", sum Zbar_K = " << b.sum_ZbarK;
    o.require(a.Z == 6, "Z(1,2,1)");
    o.require(b.Z == 16 && b.Zbar == 8 && b.sum_ZK == 32 && b.sum_ZbarK == 24, "(2,2,1) values");
}

// 4: the counting identity and the inequality for (2,2)
void check_identities(Outcome& o)
{
    for (Rational X : {Rational(1), Rational(6, 5), Rational(3, 2)}) {
        CensusReport r = census(2, 2, X);
        o.detail << " X=" << str(X) << ": Z=" << r.Z << " Zbar=" << r.Zbar << " residual=" << r.residual
                 << " inequality=" << (r.inequality_holds ? "yes" : "no") << ";";
        o.require(r.residual == 0, "residual at X = " + str(X));
        o.require(r.inequality_holds, "inequality at X = " + str(X));
    }
}

// 5: Z_K = n |cp| for three quadratic fields
void check_cp_counts(Outcome& o)
{
    for (long d : {-4, 8, 5})
        for (Rational X : {Rational(1), Rational(3, 2)}) {
            Lemma61Check c = verify_lemma61(quad(d), 2, X, census_config());
            o.detail << " disc " << d << " X=" << str(X) << ": Z_K=" << c.Z_K << " cp=" << c.cp_count
                     << " tally_cp=" << c.tally_cp << ";";
            o.require(c.ok, "disc " + std::to_string(d) + " at X = " + str(X));
        }
}

// 6: tags partition the polynomials; ncp needs a non-normal field
void check_partition(Outcome& o)
{
    Rational T(36, 25);
    EnumConfig ec;
    ec.workers = g_workers;
    for (long d : {-4, 8, 5, -3, 12}) {
        long long seen = 0;
        bool consistent = true;
        std::set<std::string> distinct;
        ClassTally t = classify_all_over_K(quad(d), 2, T, ec, [&](KPoly const& f, ClassTag tag) {
            ++seen;
            distinct.insert(to_string(f));
            consistent = consistent && classify_over_K(f, 2, T) == tag;
        });
        o.detail << " disc " << d << ": " << seen << " polynomials (cp " << t.cp << ", red " << t.red << ", ncp "
                 << t.ncp << ", lower " << t.lower << ", not primitive " << t.not_primitive << ");";
        o.require(t.total() == seen && (long long)distinct.size() == seen, "tags do not partition over disc " +
                                                                                 std::to_string(d));
        o.require(consistent, "single classification disagrees over disc " + std::to_string(d));
        o.require(t.ncp == 0, "ncp over disc " + std::to_string(d));
    }
    NumberField C = make_field(parse_polynomial("-2,0,0,1"));
    FieldElement th = C.theta();
    KPoly f(C, {th * th, th, C.one()});
    ClassTag tag = classify_over_K(f, 2, 2);
    bool structure = verify_ncp_structure(f);
    o.detail << " x^2 + t x + t^2 over Q(t), t^3 = 2: " << to_string(tag) << ", structure "
             << (structure ? "verified" : "not verified");
    o.require(tag == ClassTag::ncp && structure, "cubic witness");
}

// 7: resolvent cubic against factorization over quadratic candidates
void check_resolvent(Outcome& o)
{
    long box = 0, irreducible = 0, with_subfield = 0, disagree = 0;
    for (int a4 = 1; a4 <= 8; ++a4)
        for (int a3 = -8; a3 <= 8; ++a3)
            for (int a2 = -8; a2 <= 8; ++a2)
                for (int a1 = -8; a1 <= 8; ++a1)
                    for (int a0 = -8; a0 <= 8; ++a0) {
                        ++box;
                        if (a0 == 0)
                            continue;
                        IntPolynomial D(std::vector<Integer>{a0, a1, a2, a3, a4});
                        if (!is_canonical(D) || !is_irreducible(D))
                            continue;
                        ++irreducible;
                        bool by_factor = !subfields_of_degree(D, 2).empty();
                        with_subfield += by_factor;
                        if (quartic_subfield_resolvent(D) != by_factor)
                            ++disagree;
                    }
    o.detail << box << " quartics with positive leading coefficient (" << 2 * box << " counting the sign), " << irreducible
             << " irreducible, " << with_subfield << " with a quadratic subfield, " << disagree << " disagreements";
    o.require(disagree == 0, "disagreements");
}

// 8: Schanuel constants and exact volumes
void check_constants(Outcome& o)
{
    Rational eps(1, 1000000000000L), width(1, 1000000000);
    int bad = 0;
    for (int n = 1; n <= 20; ++n) {
        Interval S = schanuel(NumberField(), n, eps).to_interval(256);
        CertifiedReal p = CertifiedReal::from(S * riemann_zeta(n + 1, 256));
        if (!p.contains(Rational(ipow(2, n))) || p.width() >= width)
            ++bad;
    }
    CertifiedReal g = CertifiedReal::from(schanuel(quad(-4), 2, eps).to_interval(256) * riemann_zeta(3, 256));
    o.detail << "S_Q(n) zeta(n+1) = 2^n for n <= 20 with " << bad << " failures; S_Q(i)(2) zeta(3) in [" << g.lo.get_d()
             << ", " << g.hi.get_d() << "]; V_R(3) = " << str(v_real(3)) << ", V_C(2) = " << str(v_complex(2));
    o.require(bad == 0, "Q enclosures");
    o.require(g.contains(8) && g.width() < width, "Gaussian enclosure");
    o.require(v_real(3) == Rational(8, 9) && v_complex(2) == Rational(3, 4), "volumes");
}

// 9: Monte Carlo volumes at 10^7 samples
void check_monte_carlo(Outcome& o)
{
    struct Case {
        char const* name;
        int n;
        Place p;
        Rational v;
    };
    for (auto const& c : {Case{"V_R(2)", 2, Place::real, v_real(2)}, Case{"V_R(3)", 3, Place::real, v_real(3)},
                          Case{"V_C(2)", 2, Place::complex, v_complex(2)}}) {
        auto t0 = std::chrono::steady_clock::now();
        VolumeEstimate e = mc_volume(c.n, c.p, 10000000, 20240601, g_workers);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double z = std::fabs(e.estimate - c.v.get_d()) / e.standard_error;
        o.detail << " " << c.name << " = " << fixed(e.estimate, 5) << " +- " << fixed(e.standard_error, 5) << " (exact "
                 << str(c.v) << ", " << fixed(z, 2) << " SE, " << fixed(secs, 1) << " s);";
        o.require(z <= 3, c.name);
    }
}

// 10: minimal heights with witnesses
void check_heights(Outcome& o)
{
    Rational cap(100);
    auto gi = delta_exact(quad(-4), cap), g2 = delta_exact(quad(8), cap), g5 = delta_exact(quad(5), cap);
    // H = M^(1/2): delta = 1, sqrt 2, phi^(1/2) correspond to M = 1, 2, phi
    o.require(gi.delta.mahler && *gi.delta.mahler == 1, "delta(Q(i))");
    o.require(g2.delta.mahler && *g2.delta.mahler == 2, "delta(Q(sqrt2))");
    Interval phi = (Interval(1L, 128) + sqrt(Interval(5L, 128))) / Interval(2L, 128);
    Interval want5 = sqrt(phi);
    CertifiedReal d5 = g5.delta.value;
    o.require(g5.witness.minpoly == parse_polynomial("-1,-1,1") && CertifiedReal::from(want5).intersects(d5),
              "delta(Q(sqrt5))");
    auto pi = pi_exact(quad(-4), 100), p2 = pi_exact(quad(8), 100), p5 = pi_exact(quad(5), 100);
    o.require(pi.pi == 1 && p5.pi == 1 && p2.pi == 2, "pi values");
    auto s = check_silverman(quad(-4));
    o.require(s.holds && s.equality, "Silverman equality for Q(i)");
    bool others = check_silverman(quad(8)).holds && check_silverman(quad(5)).holds;
    o.require(others, "Silverman bound for Q(sqrt2), Q(sqrt5)");
    o.detail << "delta witnesses " << to_csv(gi.witness.minpoly) << " | " << to_csv(g2.witness.minpoly) << " | "
             << to_csv(g5.witness.minpoly) << "; delta(Q(sqrt5)) in [" << d5.lo.get_d() << ", " << d5.hi.get_d()
             << "]; pi witnesses " << to_csv(pi.witness.minpoly) << " | " << to_csv(p2.witness.minpoly) << " | "
             << to_csv(p5.witness.minpoly) << "; Silverman for Q(i): " << s.lhs.mid_double()
             << " vs " << s.rhs.mid_double();
}

// 11: two routes to M0, multiplicativity and the sandwich
void check_m0_routes(Outcome& o)
{
    Rational eps(1, 1000000000000L);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> u(-6, 6);
    double worst = 0;
    long mult_bad = 0, mult_total = 0;
    for (long d : {-4, 8, 5}) {
        NumberField K = quad(d);
        auto random_monic = [&] {
            return KPoly(K, {K.element(Rational(u(rng))) + Rational(u(rng)) * K.theta(),
                             K.element(Rational(u(rng))) + Rational(u(rng)) * K.theta(), K.one()});
        };
        std::vector<KPoly> fs;
        std::vector<CertifiedReal> ms;
        for (int k = 0; k < 1000; ++k) {
            KPoly f = random_monic();
            CertifiedReal a = m0(f, eps), b = m0_adelic(f, eps);
            Rational ma = a.mid(), mb = b.mid();
            double rel = Rational(abs(Rational(ma - mb)) / mb).get_d();
            worst = std::max(worst, rel);
            if (k < 40) {
                fs.push_back(f);
                ms.push_back(a);
            }
        }
        for (size_t i = 0; i + 1 < fs.size(); i += 2) {
            ++mult_total;
            CertifiedReal prod = m0(fs[i] * fs[i + 1], eps);
            CertifiedReal expect(ms[i].lo * ms[i + 1].lo, ms[i].hi * ms[i + 1].hi);
            mult_bad += !prod.intersects(expect);
        }
    }
    long numbers = 0, sandwich_bad = 0;
    std::vector<IntPolynomial> minpolys;
    for (int d = 1; d <= 3; ++d)
        enumerate_numbers(d, Rational(3, 2), {}, [&](int, IntPolynomial const& D) {
            minpolys.push_back(D);
            for (int i = 0; i < d; ++i) {
                ++numbers;
                sandwich_bad += !check_height_sandwich(make_algebraic(D, i));
            }
        });
    long pm_bad = 0;
    for (size_t i = 0; i + 1 < minpolys.size(); ++i) {
        CertifiedReal a = mahler_measure(minpolys[i], eps), b = mahler_measure(minpolys[i + 1], eps);
        CertifiedReal p = mahler_measure(minpolys[i] * minpolys[i + 1], eps);
        pm_bad += !p.intersects(CertifiedReal(a.lo * b.lo, a.hi * b.hi));
    }
    o.detail << "3000 quadratics: worst midpoint discrepancy " << worst << "; M0(fg) = M0(f)M0(g) failures " << mult_bad
             << "/" << mult_total << "; M(DE) = M(D)M(E) failures " << pm_bad << "/" << minpolys.size() - 1
             << " on consecutive minimal polynomials; sandwich failures " << sandwich_bad << "/" << numbers
             << " numbers of degree <= 3 with H <= 3/2";
    o.require(worst < 1e-10, "route discrepancy");
    o.require(mult_bad == 0 && pm_bad == 0, "multiplicativity");
    o.require(sandwich_bad == 0, "sandwich");
}

// 12: class numbers
void check_class_numbers(Outcome& o)
{
    struct Case {
        long D, h;
    };
    for (auto const& c : {Case{-4, 1}, Case{-20, 2}, Case{-23, 3}, Case{5, 1}, Case{40, 2}}) {
        long f = class_number_forms(Integer(c.D)), l = class_number_dirichlet(Integer(c.D));
        o.detail << " h(" << c.D << ") = " << f << "/" << l << ";";
        o.require(f == c.h && l == c.h, "h(" + std::to_string(c.D) + ")");
    }
    long fields = 0, bad = 0;
    for (auto const& D : fundamental_discriminants(200)) {
        ++fields;
        bad += class_number_forms(D) != class_number_dirichlet(D);
    }
    o.detail << " forms and L(1) disagree on " << bad << " of " << fields << " discriminants with |D| <= 200";
    o.require(bad == 0, "forms against L(1)");
}

// 13: convergence of the leading constant for e = 2, n = 11
void check_leading_constant(Outcome& o)
{
    Rational eps(1, 1000000000000L);
    auto a = leading_constant_partial(11, 500, eps), b = leading_constant_partial(11, 1000, eps);
    double ma = a.partial_sum.mid_double(), mb = b.partial_sum.mid_double();
    double rel = std::fabs(mb - ma) / mb;
    char buf[256];
    std::snprintf(buf, sizeof buf, "partial sum %.12f over %zu fields, %.12f over %zu fields, relative difference %.3g", ma,
                  a.terms.size(), mb, b.terms.size(), rel);
    o.detail << buf;
    o.require(rel < 1e-6, "relative difference");
}

// 14: relative counts over Q(i) against the predicted slope
void check_relative_trend(Outcome& o)
{
    NumberField K = quad(-4);
    double predicted = predicted_relative_slope(K, 2, Rational(1, 1000000000)).mid_double();
    double prev = INFINITY;
    bool in_band = true, monotone = true;
    o.detail << "prediction " << fixed(predicted) << ";";
    for (Rational X : {Rational(6, 5), Rational(7, 5), Rational(8, 5)}) {
        auto t0 = std::chrono::steady_clock::now();
        long long c = count_relative(K, 2, X, census_config());
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double ratio = (double)c / qpow(X, 12).get_d();
        double dist = std::fabs(std::log(ratio / predicted));
        o.detail << " X=" << str(X) << ": count " << c << ", ratio " << fixed(ratio, 4) << " (" << fixed(secs, 1)
                 << " s);";
        in_band = in_band && ratio >= predicted / 2.5 && ratio <= predicted * 2.5;
        monotone = monotone && dist <= prev;
        prev = dist;
    }
    o.require(in_band, "ratio outside a factor 2.5");
    o.require(monotone, "distance to the prediction increased");
}

// 15: explicit upper bound on every census above
void check_upper_bound(Outcome& o)
{
    o.require(!g_censuses.empty(), "no censuses recorded; run criteria 1-4 first");
    for (auto const& r : g_censuses) {
        BoundCheck b = verify_th4_bound(r);
        o.detail << " (" << r.e << "," << r.n << "," << str(r.X) << "): Z=" << r.Z << (b.holds ? " ok" : " VIOLATED")
                 << ";";
        o.require(b.holds, "bound at (" + std::to_string(r.e) + "," + std::to_string(r.n) + "," + str(r.X) + ")");
    }
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--workers" && i + 1 < argc)
            g_workers = std::max(1, std::atoi(argv[++i]));
        else if (a == "--only" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string k;
            while (std::getline(ss, k, ','))
                only.insert(std::atoi(k.c_str()));
        } else {
            std::cerr << "usage: acceptance [--workers N] [--only k[,k...]]\n";
            return 2;
        }
    }
    std::vector<std::pair<char const*, std::function<void(Outcome&)>>> criteria{
        {"rational census slope", check_rational_slope},
        {"quadratic census slope", check_quadratic_slope},
        {"cyclotomic censuses", check_cyclotomic},
        {"identity suite (2,2)", check_identities},
        {"Z_K = n |cp| over quadratic fields", check_cp_counts},
        {"tag partition and ncp witness", check_partition},
        {"resolvent cubic against subfield search", check_resolvent},
        {"Schanuel constants and volumes", check_constants},
        {"Monte Carlo volumes", check_monte_carlo},
        {"minimal heights", check_heights},
        {"M0 routes, multiplicativity, sandwich", check_m0_routes},
        {"class numbers", check_class_numbers},
        {"leading constant convergence (e=2, n=11)", check_leading_constant},
        {"relative count trend over Q(i)", check_relative_trend},
        {"explicit bound on the censuses", check_upper_bound},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        int id = (int)k + 1;
        if (!only.empty() && !only.count(id))
            continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(o);
        } catch (std::exception const& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << criteria[k].first << " (" << fixed(secs, 1)
                  << " s): " << o.detail.str() << std::endl;
        failed += !o.ok;
    }
    std::cout << failed << " criteria failed" << std::endl;
    return failed ? 1 : 0;
}
