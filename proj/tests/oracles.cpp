#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace oracle {

Integer bareiss_det(std::vector<std::vector<Integer>> m)
{
    size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sw = k + 1;
            while (sw < n && m[sw][k] == 0)
                ++sw;
            if (sw == n)
                return 0;
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] /= prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer sylvester_resultant(IntPolynomial const& f, IntPolynomial const& g)
{
    int m = f.degree(), n = g.degree();
    int N = m + n;
    std::vector<std::vector<Integer>> s(N, std::vector<Integer>(N, Integer(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[n + i][i + j] = g[n - j];
    return bareiss_det(s);
}

Integer sylvester_discriminant(IntPolynomial const& f)
{
    int d = f.degree();
    Integer r = sylvester_resultant(f, f.derivative()) / f.leading();
    return ((d * (d - 1) / 2) % 2) ? Integer(-r) : r;
}

namespace {

std::vector<Integer> divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

bool search(IntPolynomial const& f, std::vector<Integer>& g, int pos, double bound2, int k)
{
    if (pos == 0) {
        for (auto const& c0 : divisors(f[0]))
            for (int sgn : {1, -1}) {
                g[0] = sgn * c0;
                IntPolynomial q;
                if (hc::exact_divide(f, IntPolynomial(g), &q))
                    return true;
            }
        return false;
    }
    double b = std::floor(std::sqrt(bound2) * std::tgamma(k + 1.0) / (std::tgamma(pos + 1.0) * std::tgamma(k - pos + 1.0)));
    for (long v = -(long)b; v <= (long)b; ++v) {
        g[pos] = v;
        if (search(f, g, pos - 1, bound2, k))
            return true;
    }
    return false;
}

} // namespace

bool has_factor_bruteforce(IntPolynomial const& f)
{
    int n = f.degree();
    if (f[0] == 0)
        return n > 1;
    double b2 = hc::norm2_sq(f).get_d();
    for (int k = 1; 2 * k <= n; ++k)
        for (auto const& lead : divisors(f.leading())) {
            std::vector<Integer> g(k + 1);
            g[k] = lead;
            if (search(f, g, k - 1, b2, k))
                return true;
        }
    return false;
}

std::vector<double> real_roots_bisection(IntPolynomial const& f, double lo, double hi, double tol)
{
    auto ev = [&](double x) {
        long double r = 0;
        for (int i = f.degree(); i >= 0; --i)
            r = r * x + f[i].get_d();
        return r;
    };
    std::vector<double> out;
    int mesh = 200000;
    double step = (hi - lo) / mesh;
    for (int i = 0; i < mesh; ++i) {
        double a = lo + i * step, b = lo + (i + 1) * step;
        long double fa = ev(a), fb = ev(b);
        if (fa == 0) {
            out.push_back(a);
            continue;
        }
        if (fb == 0 || (fa < 0) == (fb < 0))
            continue;
        while (b - a > tol) {
            double m = 0.5 * (a + b);
            long double fm = ev(m);
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else
                b = m;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

std::pair<double, double> mahler_graeffe(IntPolynomial const& f, int rounds)
{
    IntPolynomial g = f;
    int n = f.degree();
    for (int k = 0; k < rounds; ++k) {
        IntPolynomial h = g * g.negated_variable();
        std::vector<Integer> c(n + 1);
        for (int i = 0; i <= n; ++i)
            c[i] = (n % 2) ? Integer(-h.coeff(2 * i)) : h.coeff(2 * i);
        g = IntPolynomial(std::move(c));
    }
    auto lg = [](Integer const& z) {
        long e;
        double m = mpz_get_d_2exp(&e, z.get_mpz_t());
        return std::log(std::fabs(m)) + e * std::log(2.0);
    };
    double scale = std::ldexp(1.0, -rounds);
    double lo = (lg(hc::norm_inf(g)) - lg(hc::binomial(n, n / 2))) * scale;
    double hi = 0.5 * lg(hc::norm2_sq(g)) * scale;
    return {std::exp(lo), std::exp(hi)};
}

double mahler_durand_kerner(IntPolynomial const& f)
{
    using C = std::complex<long double>;
    int n = f.degree();
    std::vector<long double> a(n + 1);
    for (int i = 0; i <= n; ++i)
        a[i] = f.coeff(i).get_d();
    long double lead = a[n];
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::pow(C(0.4L, 0.9L), i);
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            C p = a[n];
            for (int k = n - 1; k >= 0; --k)
                p = p * z[i] + a[k];
            C q = lead;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    q *= z[i] - z[j];
            C step = p / q;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-17L)
            break;
    }
    long double m = std::fabs(lead);
    for (auto const& r : z)
        m *= std::max<long double>(1, std::abs(r));
    return (double)m;
}

namespace {

std::vector<Integer> abs_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

} // namespace

int resolvent_rational_roots(IntPolynomial const& D)
{
    Rational a4 = D.coeff(4);
    Rational b = Rational(D.coeff(3)) / a4, c = Rational(D.coeff(2)) / a4, d = Rational(D.coeff(1)) / a4,
             e = Rational(D.coeff(0)) / a4;
    std::vector<Rational> r{-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, Rational(1)};
    Integer L = 1;
    for (auto& x : r) {
        x.canonicalize();
        L = lcm(L, x.get_den());
    }
    std::vector<Integer> ci;
    for (auto const& x : r)
        ci.push_back(Integer(x * L));
    auto eval = [&](Rational const& y) -> Rational { return ((Rational(ci[3]) * y + ci[2]) * y + ci[1]) * y + ci[0]; };
    std::vector<Rational> roots;
    if (ci[0] == 0)
        roots.push_back(0);
    if (ci[0] != 0)
        for (auto const& p : abs_divisors(ci[0]))
            for (auto const& q : abs_divisors(ci[3]))
                for (int s : {1, -1}) {
                    Rational y(s * p, q);
                    y.canonicalize();
                    if (eval(y) == 0 && std::find(roots.begin(), roots.end(), y) == roots.end())
                        roots.push_back(y);
                }
    if (ci[0] == 0) {
        // y (ci3 y^2 + ci2 y + ci1): other roots from the quadratic
        Integer disc = ci[2] * ci[2] - 4 * ci[3] * ci[1];
        Integer s;
        if (disc >= 0 && hc::is_square(disc, &s)) {
            for (Integer num : {Integer(-ci[2] + s), Integer(-ci[2] - s)}) {
                Rational y(num, 2 * ci[3]);
                y.canonicalize();
                if (std::find(roots.begin(), roots.end(), y) == roots.end())
                    roots.push_back(y);
            }
        }
    }
    return (int)roots.size();
}

} // namespace oracle
