#include "heightcensus/mahler.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/roots.hpp"

#include <cmath>
#include <limits>

namespace hc {

char const* to_string(Cmp c)
{
    switch (c) {
    case Cmp::LT:
        return "LT";
    case Cmp::EQ:
        return "EQ";
    default:
        return "GT";
    }
}

namespace {

Cmp cmp_rational(Rational const& a, Rational const& b) { return a < b ? Cmp::LT : (a == b ? Cmp::EQ : Cmp::GT); }

/* f with cyclotomic factors and powers of x removed; M is unchanged */
IntPolynomial reduced(IntPolynomial const& f)
{
    IntPolynomial r = strip_cyclotomic(f).remainder;
    int v = 0;
    while (r[v] == 0)
        ++v;
    if (v) {
        std::vector<Integer> c(r.coeffs().begin() + v, r.coeffs().end());
        r = IntPolynomial(std::move(c));
    }
    return r;
}

/* M(ax^2+bx+c) = max(|a|, |c|, (|b|+sqrt(D))/2 if D >= 0): compare with q */
Cmp quadratic_compare(IntPolynomial const& r, Rational const& q)
{
    Integer a = abs(r[2]), b = abs(r[1]), c = abs(r[0]);
    Integer D = r[1] * r[1] - 4 * r[2] * r[0];
    Cmp best = cmp_rational(Rational(std::max(a, c)), q);
    if (best == Cmp::GT || D < 0)
        return best;
    // (b + sqrt D)/2 vs q  <=>  sqrt D vs 2q - b
    Rational t = 2 * q - b;
    Cmp s;
    if (t < 0)
        s = Cmp::GT;
    else
        s = cmp_rational(Rational(D), t * t);
    if (s == Cmp::GT)
        return Cmp::GT;
    if (s == Cmp::EQ || best == Cmp::EQ)
        return Cmp::EQ;
    return Cmp::LT;
}

Interval measure_from_disks(IntPolynomial const& r, std::vector<RootDisk> const& disks, mpfr_prec_t prec)
{
    Interval m = abs(Interval(r.leading(), prec));
    Interval one(1L, prec);
    for (auto const& d : disks) {
        Interval f = max(one, d.modulus());
        for (int k = 0; k < d.multiplicity; ++k)
            m = m * f;
    }
    return m;
}

mpfr_prec_t disk_prec(std::vector<RootDisk> const& d)
{
    mpfr_prec_t p = 64;
    for (auto const& x : d)
        p = std::max(p, x.re.prec());
    return p;
}

Interval measure_at_radius(IntPolynomial const& r, BigFloat const& rad)
{
    auto disks = root_disks(r, rad);
    return measure_from_disks(r, disks, disk_prec(disks) + 32);
}

bool fits_double(IntPolynomial const& f)
{
    for (auto const& c : f.coeffs())
        if (mpz_sizeinbase(c.get_mpz_t(), 2) > 52)
            return false;
    return true;
}

} // namespace

std::optional<Rational> mahler_exact(IntPolynomial const& f)
{
    if (f.is_zero())
        throw InvalidInput("Mahler measure of the zero polynomial");
    IntPolynomial r = reduced(f);
    if (r.degree() == 0)
        return Rational(abs(r[0]));
    if (r.degree() == 1)
        return Rational(std::max(abs(r[0]), abs(r[1])));
    if (r.degree() == 2) {
        Integer a = abs(r[2]), c = abs(r[0]), b = abs(r[1]);
        Integer D = r[1] * r[1] - 4 * r[2] * r[0];
        Integer m = std::max(a, c);
        if (D < 0)
            return Rational(m);
        Integer s;
        if (is_square(D, &s))
            return std::max(Rational(m), Rational(b + s, 2));
        Integer t = 2 * m - b;
        if (t >= 0 && D <= t * t)
            return Rational(m);
    }
    return std::nullopt;
}

CertifiedReal mahler_measure(IntPolynomial const& f, Rational const& eps)
{
    if (eps <= 0)
        throw InvalidInput("eps must be positive");
    if (auto e = mahler_exact(f))
        return CertifiedReal(*e);
    IntPolynomial r = reduced(f);
    int n = r.degree();
    Rational floor_bound(std::max(abs(r.leading()), abs(r[0])));
    BigFloat rad(eps / (4 * n), 64, MPFR_RNDD);
    while (true) {
        Interval m = measure_at_radius(r, rad);
        Rational lo = m.lower(), hi = m.upper();
        if (lo < floor_bound)
            lo = floor_bound;
        if (hi - lo <= eps * lo)
            return CertifiedReal(lo, hi);
        mpfr_div_2ui(rad.get(), rad.get(), 16, MPFR_RNDD);
    }
}

Rational root_separation_sq_lower(IntPolynomial const& g)
{
    long n = g.degree();
    if (n < 2)
        return Rational(1);
    Integer den = ipow(Integer(n), n + 2) * ipow(norm2_sq(g), n - 1);
    return Rational(Integer(3), den);
}

IntPolynomial subset_product_polynomial(IntPolynomial const& f, int k)
{
    int n = f.degree();
    if (k < 0 || k > n)
        throw InvalidInput("subset size out of range");
    long N = binomial(n, k).get_si();
    Rational a(f.leading());
    // elementary symmetric functions of the roots
    std::vector<Rational> e(n + 1);
    for (int i = 0; i <= n; ++i) {
        e[i] = Rational(f[n - i]) / a;
        if (i % 2)
            e[i] = -e[i];
    }
    long top = (long)k * N;
    std::vector<Rational> s(top + 1);
    s[0] = n;
    for (long j = 1; j <= top; ++j) {
        Rational acc = 0;
        for (long i = 1; i <= std::min<long>(j - 1, n); ++i) {
            Rational t = e[i] * s[j - i];
            acc += (i % 2) ? t : Rational(-t);
        }
        if (j <= n) {
            Rational t = Rational(j) * e[j];
            acc += (j % 2) ? t : Rational(-t);
        }
        s[j] = acc;
    }
    auto newton_e = [](std::vector<Rational> const& p, int upto) {
        // p[1..upto] power sums -> elementary E[0..upto]
        std::vector<Rational> E(upto + 1);
        E[0] = 1;
        for (int j = 1; j <= upto; ++j) {
            Rational acc = 0;
            for (int i = 1; i <= j; ++i) {
                Rational t = E[j - i] * p[i];
                acc += (i % 2) ? t : Rational(-t);
            }
            E[j] = acc / j;
        }
        return E;
    };
    std::vector<Rational> P(N + 1);
    Rational am = 1;
    for (long m = 1; m <= N; ++m) {
        am *= a;
        std::vector<Rational> t(k + 1);
        for (int l = 1; l <= k; ++l)
            t[l] = s[(long)l * m];
        P[m] = am * newton_e(t, k)[k];
    }
    std::vector<Rational> eps = newton_e(P, (int)N);
    std::vector<Integer> c(N + 1);
    for (long j = 0; j <= N; ++j) {
        Rational v = (j % 2) ? Rational(-eps[j]) : eps[j];
        if (v.get_den() != 1)
            throw std::logic_error("subset-product polynomial is not integral");
        c[N - j] = v.get_num();
    }
    return IntPolynomial(std::move(c));
}

namespace {

int root_multiplicity(IntPolynomial p, Rational const& q)
{
    IntPolynomial lin = clear_denominators(RatPolynomial(std::vector<Rational>{-q, Rational(1)}));
    int m = 0;
    IntPolynomial quo;
    while (!p.is_zero() && exact_divide(p, lin, &quo)) {
        ++m;
        p = quo;
    }
    return m;
}

std::optional<Cmp> exact_fallback(IntPolynomial const& r, Rational const& q, BigFloat rad)
{
    int n = r.degree();
    if (n > kExactFallbackDegreeCap)
        throw CapExceeded("exact Mahler comparison is limited to degree " + std::to_string(kExactFallbackDegreeCap));
    IntPolynomial s = squarefree_part(r);
    IntPolynomial T = squarefree_part(s * s.reversed());
    Rational sep2 = root_separation_sq_lower(T);
    std::vector<IntPolynomial> subset_cache(n + 1);
    std::vector<bool> have(n + 1, false);
    int cap = precision_cap();
    while (true) {
        auto disks = root_disks(r, rad);
        mpfr_prec_t prec = disk_prec(disks) + 32;
        std::vector<CInterval> roots;
        std::vector<int> cls; // 1 outside, 0 inside or on the circle, -1 undecided
        bool undecided = false;
        Interval one(1L, prec);
        for (auto const& d : disks) {
            Interval mod = d.modulus();
            int c;
            if (mod.certainly_greater(Rational(1)))
                c = 1;
            else if (mod.certainly_less(Rational(1)))
                c = 0;
            else {
                // on the circle iff ||z|^2 - 1| / |z| is below the separation bound
                c = -1;
                if (mod.lo().sign() > 0) {
                    Interval g = abs(sqr(mod) - one) / mod;
                    if (sqr(g).certainly_less(sep2))
                        c = 0;
                }
            }
            if (c < 0)
                undecided = true;
            for (int k = 0; k < d.multiplicity; ++k) {
                roots.push_back(d.box());
                cls.push_back(c);
            }
        }
        if (!undecided) {
            int k = 0;
            CInterval v(Interval(r.leading(), prec), Interval(prec));
            for (size_t i = 0; i < roots.size(); ++i)
                if (cls[i] == 1) {
                    ++k;
                    v = v * roots[i];
                }
            if (k == 0)
                return cmp_rational(Rational(abs(r.leading())), q);
            if (k == n)
                return cmp_rational(Rational(abs(r[0])), q);
            Interval M = abs(v);
            if (M.certainly_less(q))
                return Cmp::LT;
            if (M.certainly_greater(q))
                return Cmp::GT;
            if (q.get_den() == 1) {
                if (!have[k]) {
                    subset_cache[k] = subset_product_polynomial(r, k);
                    have[k] = true;
                }
                for (Rational target : {q, Rational(-q)}) {
                    if (!v.re.contains(target))
                        continue;
                    int mult = root_multiplicity(subset_cache[k], target);
                    if (mult == 0)
                        continue;
                    // count k-subsets whose product enclosure contains the target
                    int count = 0;
                    std::vector<int> idx(k);
                    for (int i = 0; i < k; ++i)
                        idx[i] = i;
                    while (true) {
                        CInterval p(Interval(r.leading(), prec), Interval(prec));
                        for (int i : idx)
                            p = p * roots[i];
                        if (p.re.contains(target) && p.im.contains_zero())
                            ++count;
                        int pos = k - 1;
                        while (pos >= 0 && idx[pos] == n - k + pos)
                            --pos;
                        if (pos < 0)
                            break;
                        ++idx[pos];
                        for (int i = pos + 1; i < k; ++i)
                            idx[i] = idx[i - 1] + 1;
                    }
                    if (count == mult)
                        return Cmp::EQ;
                }
            }
        }
        if (prec >= cap)
            return std::nullopt;
        mpfr_div_2ui(rad.get(), rad.get(), 32, MPFR_RNDD);
    }
}

} // namespace

Cmp compare_mahler(IntPolynomial const& f, Rational const& q)
{
    if (q <= 0)
        throw InvalidInput("compare_mahler needs q > 0");
    if (f.is_zero())
        throw InvalidInput("Mahler measure of the zero polynomial");
    IntPolynomial r = reduced(f);
    int n = r.degree();
    if (n == 0)
        return cmp_rational(Rational(abs(r[0])), q);
    if (Rational(std::max(abs(r.leading()), abs(r[0]))) > q)
        return Cmp::GT;
    if (n == 1)
        return cmp_rational(Rational(std::max(abs(r.leading()), abs(r[0]))), q);
    if (n == 2)
        return quadratic_compare(r, q);
    // Kronecker: no cyclotomic factor and no factor x means M > 1
    if (q <= 1)
        return Cmp::GT;
    if (Rational(norm2_sq(r)) < q * q)
        return Cmp::LT;
    if (fits_double(r) && n <= 40) {
        std::vector<double> c;
        for (auto const& v : r.coeffs())
            c.push_back(v.get_d());
        double lo, hi;
        if (fast_mahler_bounds(c, lo, hi)) {
            double qd = q.get_d();
            constexpr double u = 2.3e-16;
            if (lo > qd * (1 + u))
                return Cmp::GT;
            if (hi < qd * (1 - u))
                return Cmp::LT;
        }
    }
    BigFloat rad(Rational(1, 1 << 20), 64, MPFR_RNDD);
    int cap = precision_cap();
    for (int round = 0;; ++round) {
        auto disks = root_disks(r, rad);
        mpfr_prec_t prec = disk_prec(disks);
        Interval m = measure_from_disks(r, disks, prec + 32);
        if (m.certainly_less(q))
            return Cmp::LT;
        if (m.certainly_greater(q))
            return Cmp::GT;
        if (q.get_den() == 1 && round >= 2) {
            if (auto res = exact_fallback(r, q, rad))
                return *res;
            throw PrecisionExhausted("exact Mahler comparison did not resolve within the precision cap");
        }
        if (prec >= cap)
            throw PrecisionExhausted("Mahler comparison did not resolve within the precision cap");
        mpfr_div_2ui(rad.get(), rad.get(), 48, MPFR_RNDD);
    }
}

} // namespace hc
