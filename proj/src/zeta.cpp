#include "heightcensus/zeta.hpp"
#include "heightcensus/errors.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace hc {

Rational bernoulli(int k)
{
    static std::mutex mu;
    static std::vector<Rational> B{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while ((int)B.size() <= k) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        int m = (int)B.size();
        Rational acc = 0;
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * B[j];
        B.push_back(-acc / (m + 1));
    }
    return B[k];
}

Interval hurwitz_zeta(long s, Rational const& a, mpfr_prec_t prec)
{
    if (s < 2 || a <= 0 || a > 1)
        throw InvalidInput("hurwitz_zeta needs s >= 2 and 0 < a <= 1");
    mpfr_prec_t p = prec + 32;
    long N = 16 + prec / 4;
    Interval sum(p);
    for (long k = 0; k < N; ++k)
        sum += pow(Interval(a + k, p), -s);
    Interval x(a + N, p);
    Interval xs = pow(x, -s);
    sum += pow(x, 1 - s) / Interval(s - 1, p);
    sum += xs / Interval(2L, p);
    // sum_j B_2j/(2j)! s(s+1)...(s+2j-2) x^(-s-2j+1)
    Rational coef = Rational(s); // rising factorial / (2j)!
    Interval xpow = xs / x; // x^(-s-1)
    Interval inv_x2 = Interval(1L, p) / sqr(x);
    Rational eps(1, Integer(1) << (prec + 8));
    for (int j = 1;; ++j) {
        if (j > 1) {
            coef *= Rational((s + 2 * j - 3) * (s + 2 * j - 2), (2 * j - 1) * (2 * j));
            xpow *= inv_x2;
        } else {
            coef /= 2;
        }
        Interval term = Interval(bernoulli(2 * j) * coef, p) * xpow;
        // next term bounds the remainder
        Rational ncoef = coef * Rational((s + 2 * j - 1) * (s + 2 * j), (2 * j + 1) * (2 * j + 2));
        Interval next = abs(Interval(bernoulli(2 * j + 2) * ncoef, p) * xpow * inv_x2);
        sum += term;
        if (next.certainly_less(eps) || j > 4 * N) {
            sum += Interval(-next.upper(), next.upper(), p);
            break;
        }
    }
    return sum;
}

Interval riemann_zeta(long s, mpfr_prec_t prec) { return hurwitz_zeta(s, Rational(1), prec); }

Interval dirichlet_l(Integer const& D, long s, mpfr_prec_t prec)
{
    if (s < 2)
        throw InvalidInput("dirichlet_l needs s >= 2");
    mpfr_prec_t p = prec + 32;
    long q = Integer(abs(D)).get_si();
    // direct series when the tail sum_{m >= N} m^-s <= N^-s + N^(1-s)/(s-1) is small enough
    double logN = (prec + 8.0) * std::log(2.0) / (s - 1);
    if (logN < std::log(200000.0)) {
        long N = std::max(2L, (long)std::ceil(std::exp(logN)));
        Interval sum(p);
        for (long m = 1; m < N; ++m) {
            int c = kronecker_symbol(D.get_si(), m);
            if (c == 0)
                continue;
            Interval t = pow(Interval(m, p), -s);
            sum += c > 0 ? t : -t;
        }
        Interval Nn(N, p);
        Interval tail = pow(Nn, -s) + pow(Nn, 1 - s) / Interval(s - 1, p);
        return sum + Interval(-tail.upper(), tail.upper(), p);
    }
    if (q == 1)
        return riemann_zeta(s, prec);
    Interval sum(p);
    for (long a = 1; a <= q; ++a) {
        int c = kronecker_symbol(D.get_si(), a);
        if (c == 0)
            continue;
        Interval h = hurwitz_zeta(s, Rational(a, q), prec);
        sum += c > 0 ? h : -h;
    }
    return sum * pow(Interval(q, p), -s);
}

Interval dirichlet_l1(Integer const& D, mpfr_prec_t prec)
{
    if (!is_fundamental_discriminant(D) || D == 1)
        throw InvalidInput("dirichlet_l1 needs a fundamental discriminant != 1");
    mpfr_prec_t p = prec + 32;
    long q = Integer(abs(D)).get_si();
    long d = D.get_si();
    if (d < 0) {
        long acc = 0;
        for (long a = 1; a < q; ++a)
            acc += kronecker_symbol(d, a) * a;
        // L(1) = -pi / |D|^(3/2) * sum chi(a) a
        return Interval(-acc, p) * Interval::pi(p) / (Interval(q, p) * sqrt(Interval(q, p)));
    }
    // L(1) = -1/sqrt(D) * sum chi(a) log sin(pi a / D), pairing a with D - a
    Interval pi = Interval::pi(p), sum(p);
    for (long a = 1; 2 * a <= q; ++a) {
        int c = kronecker_symbol(d, a);
        if (c == 0)
            continue;
        Interval angle = pi * Interval(Rational(a, q), p);
        Interval t = log(sin_first_quadrant(angle));
        if (2 * a < q)
            t = t + t; // chi(D - a) = chi(a) for D > 0
        sum += c > 0 ? t : -t;
    }
    return -sum / sqrt(Interval(q, p));
}

Interval dedekind_zeta(Integer const& D, long s, mpfr_prec_t prec)
{
    Interval z = riemann_zeta(s, prec);
    if (D == 1)
        return z;
    return z * dirichlet_l(D, s, prec);
}

} // namespace hc
