#include "heightcensus/modular.hpp"

#include <algorithm>
#include <functional>

namespace hc::nmod {

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

uint64_t inv(uint64_t a, uint64_t p)
{
    int64_t t = 0, nt = 1, r = (int64_t)p, nr = (int64_t)(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0)
        t += (int64_t)p;
    return (uint64_t)t;
}

uint64_t reduce(Integer const& a, uint64_t p)
{
    return mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)p);
}

Poly reduce(IntPolynomial const& f, uint64_t p)
{
    Poly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = reduce(f.coeffs()[i], p);
    trim(r);
    return r;
}

Poly add(Poly const& a, Poly const& b, uint64_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

Poly sub(Poly const& a, Poly const& b, uint64_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

Poly mul(Poly const& a, Poly const& b, uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Poly scale(Poly const& a, uint64_t s, uint64_t p)
{
    Poly r(a);
    for (auto& v : r)
        v = v * s % p;
    trim(r);
    return r;
}

void divrem(Poly const& a, Poly const& b, uint64_t p, Poly* q, Poly* r)
{
    int db = degree(b);
    Poly rr(a);
    if (degree(a) < db) {
        if (q)
            q->clear();
        if (r)
            *r = rr;
        return;
    }
    Poly qq(degree(a) - db + 1, 0);
    uint64_t li = inv(b.back(), p);
    for (int i = degree(a); i >= db; --i) {
        uint64_t t = rr[i] * li % p;
        if (!t)
            continue;
        qq[i - db] = t;
        for (int j = 0; j <= db; ++j)
            rr[i - db + j] = (rr[i - db + j] + p - t * b[j] % p) % p;
    }
    rr.resize(db);
    trim(rr);
    trim(qq);
    if (q)
        *q = std::move(qq);
    if (r)
        *r = std::move(rr);
}

Poly rem(Poly const& a, Poly const& b, uint64_t p)
{
    Poly r;
    divrem(a, b, p, nullptr, &r);
    return r;
}

Poly make_monic(Poly const& a, uint64_t p)
{
    if (a.empty())
        return a;
    return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, uint64_t p)
{
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

Poly xgcd(Poly const& a, Poly const& b, uint64_t p, Poly* s, Poly* t)
{
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divrem(r0, r1, p, &q, &r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    uint64_t li = r0.empty() ? 1 : inv(r0.back(), p);
    if (s)
        *s = scale(s0, li, p);
    if (t)
        *t = scale(t0, li, p);
    return scale(r0, li, p);
}

Poly derivative(Poly const& a, uint64_t p)
{
    if (a.size() <= 1)
        return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

Poly powmod(Poly const& base, uint64_t e, Poly const& f, uint64_t p)
{
    Poly result{1}, b = rem(base, f, p);
    result = rem(result, f, p);
    while (e) {
        if (e & 1)
            result = rem(mul(result, b, p), f, p);
        e >>= 1;
        if (e)
            b = rem(mul(b, b, p), f, p);
    }
    return result;
}

bool is_squarefree(Poly const& f, uint64_t p)
{
    Poly d = derivative(f, p);
    if (d.empty())
        return degree(f) <= 0;
    return degree(gcd(f, d, p)) == 0;
}

namespace {

/* distinct-degree factorization: (product of degree-i factors, i) */
std::vector<std::pair<Poly, int>> ddf(Poly f, uint64_t p)
{
    std::vector<std::pair<Poly, int>> out;
    f = make_monic(f, p);
    Poly x{0, 1};
    Poly h = rem(x, f, p);
    for (int i = 1; 2 * i <= degree(f); ++i) {
        h = powmod(h, p, f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (degree(g) > 0) {
            out.emplace_back(g, i);
            divrem(f, g, p, &f, nullptr);
            h = rem(h, f, p);
        }
    }
    if (degree(f) > 0)
        out.emplace_back(f, degree(f));
    return out;
}

void edf(Poly const& f, int d, uint64_t p, uint64_t& state, std::vector<Poly>& out)
{
    if (degree(f) == d) {
        out.push_back(make_monic(f, p));
        return;
    }
    int n = degree(f);
    while (true) {
        Poly a(n);
        for (auto& v : a) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            v = (state >> 33) % p;
        }
        trim(a);
        if (degree(a) < 1)
            continue;
        // t = a^(1 + p + ... + p^(d-1)) then t^((p-1)/2)
        Poly t = rem(a, f, p), frob = t;
        for (int i = 1; i < d; ++i) {
            frob = powmod(frob, p, f, p);
            t = rem(mul(t, frob, p), f, p);
        }
        t = powmod(t, (p - 1) / 2, f, p);
        Poly g = gcd(f, sub(t, Poly{1}, p), p);
        if (degree(g) > 0 && degree(g) < n) {
            Poly q;
            divrem(f, g, p, &q, nullptr);
            edf(g, d, p, state, out);
            edf(q, d, p, state, out);
            return;
        }
    }
}

} // namespace

std::vector<int> factor_degrees(Poly const& f, uint64_t p)
{
    std::vector<int> out;
    for (auto const& [g, i] : ddf(f, p))
        for (int k = 0; k < degree(g) / i; ++k)
            out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> factor_squarefree(Poly const& f, uint64_t p)
{
    std::vector<Poly> out;
    uint64_t state = 0x9e3779b97f4a7c15ULL ^ p;
    for (auto const& [g, i] : ddf(f, p))
        edf(g, i, p, state, out);
    std::sort(out.begin(), out.end(), [](Poly const& a, Poly const& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

} // namespace hc::nmod
