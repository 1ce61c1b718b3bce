#include "heightcensus/factor.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/modular.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>

namespace hc {

namespace {

using ZPoly = std::vector<Integer>;

void zmod(ZPoly& a, Integer const& m)
{
    for (auto& v : a)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(ZPoly const& a, ZPoly const& b, Integer const& m)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    zmod(r, m);
    return r;
}

ZPoly zadd(ZPoly const& a, ZPoly const& b, Integer const& m)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    zmod(r, m);
    return r;
}

ZPoly zsub(ZPoly const& a, ZPoly const& b, Integer const& m)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    zmod(r, m);
    return r;
}

/* division by a monic h modulo m */
void zdivrem(ZPoly const& a, ZPoly const& h, Integer const& m, ZPoly& q, ZPoly& r)
{
    int dh = (int)h.size() - 1, da = (int)a.size() - 1;
    r = a;
    if (da < dh) {
        q.clear();
        return;
    }
    q.assign(da - dh + 1, Integer(0));
    for (int i = da; i >= dh; --i) {
        Integer t = r[i];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0)
            continue;
        q[i - dh] = t;
        for (int j = 0; j <= dh; ++j)
            r[i - dh + j] -= t * h[j];
    }
    r.resize(dh);
    zmod(r, m);
    zmod(q, m);
}

ZPoly from_nmod(nmod::Poly const& a)
{
    ZPoly r;
    for (auto v : a)
        r.emplace_back((unsigned long)v);
    return r;
}

ZPoly from_int(IntPolynomial const& f) { return f.coeffs(); }

/* one quadratic Hensel step, modulus m -> m^2 */
void hensel_step(ZPoly const& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, Integer const& m)
{
    Integer m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivrem(zmul(s, e, m2), h, m2, q, r);
    ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly hs = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), ZPoly{Integer(1)}, m2);
    ZPoly c, d;
    zdivrem(zmul(s, b, m2), hs, m2, c, d);
    s = zsub(s, d, m2);
    t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
}

IntPolynomial symmetric(ZPoly a, Integer const& m)
{
    Integer half = m / 2;
    for (auto& v : a) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half)
            v -= m;
    }
    return IntPolynomial(std::move(a));
}

std::vector<uint64_t> const& small_primes()
{
    static std::vector<uint64_t> const ps = [] {
        std::vector<uint64_t> v;
        for (uint64_t n = 3; v.size() < 400; n += 2) {
            bool pr = true;
            for (uint64_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) {
                    pr = false;
                    break;
                }
            if (pr)
                v.push_back(n);
        }
        return v;
    }();
    return ps;
}

bool good_prime(IntPolynomial const& f, uint64_t p, nmod::Poly& fp)
{
    if (nmod::reduce(f.leading(), p) == 0)
        return false;
    fp = nmod::reduce(f, p);
    return nmod::is_squarefree(fp, p);
}

using DegSet = std::bitset<64>;

DegSet subset_sums(std::vector<int> const& degs)
{
    DegSet s;
    s[0] = true;
    for (int d : degs)
        s |= s << d;
    return s;
}

std::vector<IntPolynomial> zassenhaus(IntPolynomial f)
{
    int n = f.degree();
    if (n <= 1)
        return {f};
    // choose a prime, intersecting the possible factor degrees across primes
    DegSet possible;
    possible.set();
    uint64_t best_p = 0;
    std::vector<int> best_degs;
    int tried = 0;
    for (uint64_t p : small_primes()) {
        nmod::Poly fp;
        if (!good_prime(f, p, fp))
            continue;
        std::vector<int> degs = nmod::factor_degrees(fp, p);
        possible &= subset_sums(degs);
        if (best_p == 0 || degs.size() < best_degs.size()) {
            best_p = p;
            best_degs = degs;
        }
        bool only_trivial = true;
        for (int d = 1; d < n; ++d)
            if (possible[d])
                only_trivial = false;
        if (only_trivial)
            return {f};
        if (++tried >= 7)
            break;
    }
    if (best_p == 0)
        throw std::logic_error("zassenhaus: no good prime");
    uint64_t p = best_p;
    nmod::Poly fp = nmod::reduce(f, p);
    std::vector<nmod::Poly> ufac = nmod::factor_squarefree(fp, p);
    int r = (int)ufac.size();
    if (r == 1)
        return {f};

    Integer a = f.leading();
    // |factor coeff| <= 2^n |f|_inf C(n, n/2); candidates carry the factor |a|
    Integer bound = ipow(Integer(2), n) * norm_inf(f) * binomial(n, n / 2) * abs(a) * 2 + 1;
    Integer M = p;
    int steps = 0;
    while (M <= bound) {
        M = M * M;
        ++steps;
    }

    // sequential lifting of a*u_0, u_1*...*u_{r-1}, and so on
    std::vector<ZPoly> lifted;
    ZPoly F = from_int(f);
    zmod(F, M);
    Integer lead = a;
    for (int i = 0; i + 1 < r; ++i) {
        uint64_t lp = nmod::reduce(lead, p);
        nmod::Poly g0 = nmod::scale(ufac[i], lp, p);
        nmod::Poly h0{1};
        for (int j = i + 1; j < r; ++j)
            h0 = nmod::mul(h0, ufac[j], p);
        nmod::Poly s0, t0;
        nmod::xgcd(g0, h0, p, &s0, &t0);
        ZPoly g = from_nmod(g0), h = from_nmod(h0), s = from_nmod(s0), t = from_nmod(t0);
        Integer m = p;
        for (int k = 0; k < steps; ++k) {
            ZPoly Fm = F;
            zmod(Fm, m * m);
            hensel_step(Fm, g, h, s, t, m);
            m = m * m;
        }
        // make g monic
        Integer li;
        Integer gl = g.back();
        mpz_invert(li.get_mpz_t(), gl.get_mpz_t(), M.get_mpz_t());
        for (auto& v : g)
            v *= li;
        zmod(g, M);
        lifted.push_back(std::move(g));
        F = std::move(h);
        lead = 1;
    }
    lifted.push_back(F);

    std::vector<IntPolynomial> out;
    std::vector<int> alive(r);
    for (int i = 0; i < r; ++i)
        alive[i] = i;
    IntPolynomial cur = f;
    int s = 1;
    while (2 * s <= (int)alive.size()) {
        bool found = false;
        int k = (int)alive.size();
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            ZPoly prod{cur.leading()};
            for (int i : idx)
                prod = zmul(prod, lifted[alive[i]], M);
            IntPolynomial cand = canonical(symmetric(prod, M));
            IntPolynomial q;
            if (cand.degree() > 0 && exact_divide(cur, cand, &q)) {
                out.push_back(cand);
                cur = q;
                std::vector<int> rest;
                for (int i = 0, j = 0; i < k; ++i) {
                    if (j < s && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(alive[i]);
                }
                alive = rest;
                found = true;
                break;
            }
            int pos = s - 1;
            while (pos >= 0 && idx[pos] == k - s + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int i = pos + 1; i < s; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found)
            ++s;
    }
    if (cur.degree() > 0)
        out.push_back(canonical(cur));
    return out;
}

} // namespace

std::vector<IntPolynomial> factor_squarefree(IntPolynomial const& f, int degree_cap)
{
    if (f.degree() > degree_cap)
        throw CapExceeded("factorization degree " + std::to_string(f.degree()) + " exceeds cap " +
                          std::to_string(degree_cap));
    if (f.degree() < 1)
        return {};
    std::vector<IntPolynomial> out;
    IntPolynomial g = canonical(f);
    // pull out powers of x first so that f(0) != 0
    int v = 0;
    while (g[v] == 0)
        ++v;
    if (v > 0) {
        out.push_back(IntPolynomial{0, 1});
        std::vector<Integer> c(g.coeffs().begin() + v, g.coeffs().end());
        g = IntPolynomial(std::move(c));
    }
    if (g.degree() >= 1)
        for (auto& h : zassenhaus(g))
            out.push_back(canonical(h));
    std::sort(out.begin(), out.end());
    return out;
}

Factorization factor_over_rationals(IntPolynomial const& f, int degree_cap)
{
    if (f.is_zero())
        throw InvalidInput("factorization of the zero polynomial");
    Factorization r;
    Integer c = content(f);
    if (f.leading() < 0)
        c = -c;
    r.content = Rational(c);
    if (f.degree() == 0)
        return r;
    for (auto const& [s, i] : squarefree_decomposition(f))
        for (auto& g : factor_squarefree(s, degree_cap))
            r.factors.emplace_back(g, i);
    std::sort(r.factors.begin(), r.factors.end());
    return r;
}

bool irreducible_by_degree_sets(IntPolynomial const& f, int primes)
{
    int n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    if (f[0] == 0)
        return false;
    DegSet possible;
    possible.set();
    int tried = 0;
    for (uint64_t p : small_primes()) {
        nmod::Poly fp;
        if (!good_prime(f, p, fp))
            continue;
        possible &= subset_sums(nmod::factor_degrees(fp, p));
        bool only_trivial = true;
        for (int d = 1; d < n; ++d)
            if (possible[d])
                only_trivial = false;
        if (only_trivial)
            return true;
        if (++tried >= primes)
            break;
    }
    return false;
}

bool is_irreducible(IntPolynomial const& f)
{
    if (f.degree() < 1)
        return false;
    if (irreducible_by_degree_sets(f))
        return true;
    IntPolynomial g = primitive_part(f);
    if (!is_squarefree(g))
        return false;
    return factor_squarefree(g, 64).size() == 1;
}

IntPolynomial cyclotomic(long k)
{
    static std::mutex mu;
    static std::map<long, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end())
            return it->second;
    }
    if (k < 1)
        throw InvalidInput("cyclotomic index must be positive");
    IntPolynomial r = IntPolynomial::monomial(Integer(1), (int)k) - IntPolynomial{1};
    for (long d = 1; d < k; ++d)
        if (k % d == 0)
            r = exact_quotient(r, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, r);
    return r;
}

CyclotomicSplit strip_cyclotomic(IntPolynomial const& f)
{
    if (f.is_zero())
        throw InvalidInput("strip_cyclotomic of zero");
    CyclotomicSplit out;
    IntPolynomial rem = f;
    int d = f.degree();
    for (long k = 1; k <= 2L * d * d + 2; ++k) {
        long ph = euler_phi(k);
        if (ph > rem.degree())
            continue;
        IntPolynomial phi = cyclotomic(k), q;
        while (rem.degree() >= ph && exact_divide(rem, phi, &q)) {
            out.indices.push_back(k);
            rem = q;
        }
    }
    out.remainder = rem;
    return out;
}

} // namespace hc
