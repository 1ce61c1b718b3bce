#include "heightcensus/constants.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/quadratic.hpp"
#include "heightcensus/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <thread>

namespace hc {

Rational v_real(int n)
{
    if (n < 1)
        throw InvalidInput("v_real needs n >= 1");
    int l = (n - 1) / 2;
    Rational v = Rational(ipow(Integer(n + 1), l));
    for (int i = 1; i <= l; ++i)
        v *= Rational(ipow(Integer(2 * i), n - 2 * i), ipow(Integer(2 * i + 1), n + 1 - 2 * i));
    v.canonicalize();
    return v;
}

Rational v_complex(int n)
{
    if (n < 1)
        throw InvalidInput("v_complex needs n >= 1");
    Integer f = 1;
    for (int i = 2; i <= n + 1; ++i)
        f *= i;
    Rational v(ipow(Integer(n + 1), n + 1), f * f);
    v.canonicalize();
    return v;
}

namespace {

using cd = std::complex<double>;

double mahler_of_roots(std::vector<cd> a)
{
    while (a.size() > 1 && std::abs(a.back()) == 0)
        a.pop_back();
    int n = (int)a.size() - 1;
    if (n <= 0)
        return std::abs(a[0]);
    // M is invariant under reversal; keep |lead| >= |constant|
    if (std::abs(a[n]) < std::abs(a[0]))
        std::reverse(a.begin(), a.end());
    if (n == 1)
        return std::max(std::abs(a[0]), std::abs(a[1]));
    cd lead = a[n];
    double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(a[i] / lead), 1.0 / (n - i)));
    radius = std::max(radius, 1e-3);
    std::vector<cd> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(radius, 2 * M_PI * (i + 0.25) / n + 0.4);
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            cd p = a[n], dp = 0;
            for (int k = n - 1; k >= 0; --k) {
                dp = dp * z[i] + p;
                p = p * z[i] + a[k];
            }
            if (p == cd(0))
                continue;
            cd ratio = p / dp, s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            cd step = ratio / (1.0 - ratio * s);
            z[i] -= step;
            moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (moved < 1e-15)
            break;
    }
    double m = std::abs(lead);
    for (auto const& r : z)
        m *= std::max(1.0, std::abs(r));
    return m;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// uniform in [-1, 1) from (seed, sample, coordinate)
double uniform(std::uint64_t seed, long long i, int j)
{
    std::uint64_t h = splitmix(splitmix(seed) ^ splitmix((std::uint64_t)i * 64 + (std::uint64_t)j));
    return (double)(h >> 11) * 0x1.0p-52 - 1.0;
}

mpfr_prec_t start_bits(Rational const& eps)
{
    long bits = 64;
    for (Rational t = eps; t < 1; t *= 2)
        ++bits;
    return bits;
}

struct FieldData {
    Integer disc;
    long h = 1;
    int w = 2, r = 1, s = 0;
    CertifiedReal regulator{Rational(1)};
};

FieldData field_data(NumberField const& K, mpfr_prec_t p)
{
    FieldData f;
    if (K.degree() == 1) {
        f.disc = 1;
        return f;
    }
    if (K.degree() != 2)
        throw CapExceeded("Schanuel constants are implemented for [K:Q] <= 2");
    QuadraticInvariants q = quadratic_invariants(K, p);
    f.disc = q.disc;
    f.h = q.h;
    f.w = q.w;
    f.r = q.r;
    f.s = q.s;
    if (q.r > 0)
        f.regulator = q.regulator;
    return f;
}

Interval schanuel_at(FieldData const& f, int n, mpfr_prec_t p)
{
    Interval zeta = dedekind_zeta(f.disc, n + 1, p);
    Interval base = pow(Interval(2L, p), f.r) * pow(Interval(2L, p) * Interval::pi(p), f.s) /
                    sqrt(Interval(Integer(abs(f.disc)), p));
    Interval S = Interval(f.h, p) * f.regulator.to_interval(p) / (Interval(f.w, p) * zeta) * pow(base, n + 1) *
                 pow(Interval(n + 1, p), f.r + f.s - 1);
    return S;
}

template <class F>
CertifiedReal refine(Rational const& eps, F const& at)
{
    if (eps <= 0)
        throw InvalidInput("eps must be positive");
    for (mpfr_prec_t p = start_bits(eps); p <= 4 * precision_cap(); p *= 2) {
        CertifiedReal c = CertifiedReal::from(at(p));
        if (c.lo > 0 && c.width() <= eps * c.lo)
            return c;
    }
    throw PrecisionExhausted("constant did not reach the requested width");
}

Interval relative_slope_at(FieldData const& f, int n, mpfr_prec_t p)
{
    Rational v = qpow(v_real(n), f.r) * qpow(v_complex(n), f.s) * n;
    return Interval(v, p) * schanuel_at(f, n, p);
}

} // namespace

double mahler_double(std::vector<double> const& a)
{
    std::vector<cd> c(a.begin(), a.end());
    return mahler_of_roots(std::move(c));
}

double mahler_double_complex(std::vector<double> const& re, std::vector<double> const& im)
{
    std::vector<cd> c(re.size());
    for (size_t i = 0; i < re.size(); ++i)
        c[i] = cd(re[i], im[i]);
    return mahler_of_roots(std::move(c));
}

VolumeEstimate mc_volume(int n, Place place, long long samples, std::uint64_t seed, int workers)
{
    if (n < 1 || n > 4)
        throw InvalidInput("mc_volume supports 1 <= n <= 4");
    if (samples < 1)
        throw InvalidInput("samples must be positive");
    bool cx = place == Place::complex;
    int dim = cx ? 2 * (n + 1) : n + 1;
    double half = std::ldexp(1.0, n);
    std::vector<double> binom(n + 1, 1);
    for (int i = 1; i <= n; ++i)
        binom[i] = binom[i - 1] * (n - i + 1) / i;
    workers = std::max(1, workers);
    std::vector<long long> hits(workers, 0);
    auto run = [&](int w) {
        std::vector<double> re(n + 1), im(n + 1);
        for (long long i = w; i < samples; i += workers) {
            bool out = false;
            double l2 = 0;
            for (int k = 0; k <= n && !out; ++k) {
                re[k] = half * uniform(seed, i, k);
                im[k] = cx ? half * uniform(seed, i, n + 1 + k) : 0.0;
                double mod2 = re[k] * re[k] + im[k] * im[k];
                // M >= |a_k| / C(n, k)
                out = mod2 > binom[k] * binom[k];
                l2 += mod2;
            }
            if (out)
                continue;
            // M <= |a|_2
            if (l2 <= 1 || (cx ? mahler_double_complex(re, im) : mahler_double(re)) <= 1)
                ++hits[w];
        }
    };
    if (workers == 1)
        run(0);
    else {
        std::vector<std::thread> ts;
        for (int w = 0; w < workers; ++w)
            ts.emplace_back(run, w);
        for (auto& t : ts)
            t.join();
    }
    VolumeEstimate v;
    v.samples = samples;
    for (auto h : hits)
        v.hits += h;
    double box = std::pow(2 * half, dim);
    double norm = cx ? std::pow(M_PI, n + 1) : std::ldexp(1.0, n + 1);
    double p = (double)v.hits / samples;
    v.estimate = box * p / norm;
    v.standard_error = box * std::sqrt(p * (1 - p) / samples) / norm;
    return v;
}

CertifiedReal schanuel(NumberField const& K, int n, Rational const& eps)
{
    if (n < 1)
        throw InvalidInput("schanuel needs n >= 1");
    return refine(eps, [&](mpfr_prec_t p) { return schanuel_at(field_data(K, p), n, p); });
}

CertifiedReal mv_slope(int d, Rational const& eps)
{
    if (d < 1)
        throw InvalidInput("mv_slope needs d >= 1");
    FieldData q;
    q.disc = 1;
    return refine(eps, [&](mpfr_prec_t p) { return relative_slope_at(q, d, p); });
}

CertifiedReal predicted_relative_slope(NumberField const& K, int n, Rational const& eps)
{
    if (n < 1)
        throw InvalidInput("predicted_relative_slope needs n >= 1");
    return refine(eps, [&](mpfr_prec_t p) { return relative_slope_at(field_data(K, p), n, p); });
}

LeadingConstantPartial leading_constant_partial(int n, long disc_bound, Rational const& eps)
{
    if (n < 2)
        throw InvalidInput("leading_constant_partial needs n >= 2");
    LeadingConstantPartial out;
    out.n = n;
    out.disc_bound = disc_bound;
    out.partial_sum = CertifiedReal(Rational(0));
    out.last_term = CertifiedReal(Rational(0));
    for (auto const& D : fundamental_discriminants(disc_bound)) {
        NumberField K = make_field(quadratic_generator(D));
        CertifiedReal t = predicted_relative_slope(K, n, eps);
        out.partial_sum = CertifiedReal(out.partial_sum.lo + t.lo, out.partial_sum.hi + t.hi);
        out.last_term = t;
        out.terms.emplace_back(D, t);
    }
    return out;
}

} // namespace hc
