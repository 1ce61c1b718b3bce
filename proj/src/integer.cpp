#include "heightcensus/integer.hpp"
#include "heightcensus/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit((unsigned char)c) != 0; });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace((unsigned char)s.front()))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back()))
        s.remove_suffix(1);
    return s;
}

} // namespace

Integer parse_integer(std::string_view s)
{
    s = trim(s);
    std::string_view body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+'))
        body.remove_prefix(1);
    if (!all_digits(body))
        throw InvalidInput("not an integer: '" + std::string(s) + "'");
    Integer z;
    std::string t(s[0] == '+' ? s.substr(1) : s);
    z.set_str(t, 10);
    return z;
}

Rational parse_rational(std::string_view s)
{
    s = trim(s);
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Integer p = parse_integer(s.substr(0, slash));
        Integer q = parse_integer(s.substr(slash + 1));
        if (q == 0)
            throw InvalidInput("zero denominator in '" + std::string(s) + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        std::string_view ipd = ip;
        if (!ipd.empty() && (ipd[0] == '-' || ipd[0] == '+'))
            ipd.remove_prefix(1);
        if ((!ipd.empty() && !all_digits(ipd)) || (!fp.empty() && !all_digits(fp)) || (ipd.empty() && fp.empty()))
            throw InvalidInput("not a rational: '" + std::string(s) + "'");
        Integer num(0);
        if (!ipd.empty())
            num.set_str(std::string(ipd), 10);
        Integer den = ipow(Integer(10), fp.size());
        if (!fp.empty())
            num = num * den + Integer(std::string(fp));
        Rational r(neg ? Integer(-num) : num, den);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(s));
}

std::string to_string(Integer const& z) { return z.get_str(); }

std::string to_string(Rational const& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer isqrt(Integer const& n)
{
    if (n < 0)
        throw InvalidInput("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Integer const& n, Integer* root)
{
    if (n < 0)
        return false;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    if (root)
        *root = isqrt(n);
    return true;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(Integer const& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rational qpow(Rational const& b, long e)
{
    if (e < 0) {
        if (b == 0)
            throw InvalidInput("zero to a negative power");
        Rational inv = 1 / b;
        return qpow(inv, -e);
    }
    Rational r(ipow(b.get_num(), (unsigned long)e), ipow(b.get_den(), (unsigned long)e));
    r.canonicalize();
    return r;
}

Integer floor_q(Rational const& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_q(Rational const& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

namespace {

bool probably_prime(Integer const& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/* Brent's variant of Pollard rho; n odd composite. */
Integer rho_split(Integer const& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1, m = 128;
        auto f = [&](Integer const& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_rec(Integer const& n, std::map<Integer, unsigned>& out)
{
    if (n == 1)
        return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer r;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        r = isqrt(n);
        factor_rec(r, out);
        factor_rec(r, out);
        return;
    }
    Integer d = rho_split(n);
    factor_rec(d, out);
    factor_rec(Integer(n / d), out);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n)
{
    if (n == 0)
        throw InvalidInput("factor_integer(0)");
    n = abs(n);
    std::map<Integer, unsigned> out;
    static std::vector<unsigned long> const small_primes = [] {
        std::vector<unsigned long> ps;
        for (unsigned long p = 2; p < 4096; ++p) {
            bool comp = false;
            for (unsigned long d : ps) {
                if (d * d > p)
                    break;
                if (p % d == 0) {
                    comp = true;
                    break;
                }
            }
            if (!comp)
                ps.push_back(p);
        }
        return ps;
    }();
    for (unsigned long p : small_primes) {
        if (Integer(p) * p > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            out[Integer(p)] += 1;
        }
    }
    if (n > 1)
        factor_rec(n, out);
    return {out.begin(), out.end()};
}

Integer square_part_root(Integer const& n)
{
    Integer s = 1;
    for (auto const& [p, e] : factor_integer(n))
        s *= ipow(p, e / 2);
    return s;
}

bool is_fundamental_discriminant(Integer const& d)
{
    if (d == 0 || d == 1)
        return false;
    Integer r4 = d % 4;
    if (r4 < 0)
        r4 += 4;
    auto squarefree = [](Integer const& m) {
        for (auto const& [p, e] : factor_integer(m))
            if (e > 1)
                return false;
        return true;
    };
    if (r4 == 1)
        return squarefree(d);
    if (r4 != 0)
        return false;
    Integer m = d / 4, m4 = m % 4;
    if (m4 < 0)
        m4 += 4;
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

Integer fundamental_discriminant(Integer const& d)
{
    if (d == 0 || is_square(d))
        throw InvalidInput("fundamental_discriminant of a square");
    Integer m = d < 0 ? Integer(-1) : Integer(1);
    for (auto const& [p, e] : factor_integer(d))
        if (e % 2 == 1)
            m *= p;
    Integer m4 = m % 4;
    if (m4 < 0)
        m4 += 4;
    return m4 == 1 ? m : Integer(4 * m);
}

int kronecker_symbol(Integer const& d, Integer const& m0)
{
    if (m0 == 0)
        return abs(d) == 1 ? 1 : 0;
    int sign = 1;
    Integer m = m0;
    if (m < 0) {
        m = -m;
        if (d < 0)
            sign = -1;
    }
    unsigned long v2 = mpz_scan1(m.get_mpz_t(), 0);
    if (v2 > 0) {
        if (mpz_even_p(d.get_mpz_t()))
            return 0;
        Integer r8 = d % 8;
        if (r8 < 0)
            r8 += 8;
        int k2 = (r8 == 1 || r8 == 7) ? 1 : -1;
        if (v2 % 2 == 1)
            sign *= k2;
        m >>= v2;
    }
    if (m == 1)
        return sign;
    Integer a = d % m;
    if (a < 0)
        a += m;
    return sign * mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

int kronecker_symbol(long d, long m) { return kronecker_symbol(Integer(d), Integer(m)); }

long euler_phi(long n)
{
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

} // namespace hc
