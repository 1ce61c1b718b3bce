#include "heightcensus/polynomial.hpp"
#include "heightcensus/errors.hpp"

#include <sstream>

namespace hc {

IntPolynomial parse_polynomial(std::string_view s)
{
    std::vector<Integer> c;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
        c.push_back(parse_integer(tok));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(c));
}

std::string to_csv(IntPolynomial const& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i)
            out += ',';
        out += f[i].get_str();
    }
    return out;
}

std::string to_pretty(IntPolynomial const& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Integer a = f[i];
        if (a == 0)
            continue;
        if (first) {
            if (a < 0)
                os << "-";
        } else
            os << (a < 0 ? " - " : " + ");
        Integer m = abs(a);
        if (m != 1 || i == 0)
            os << m;
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

Integer content(IntPolynomial const& f)
{
    Integer g = 0;
    for (auto const& a : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(IntPolynomial const& f)
{
    if (f.is_zero())
        return f;
    Integer g = content(f);
    std::vector<Integer> c(f.coeffs());
    for (auto& a : c)
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

IntPolynomial canonical(IntPolynomial const& f)
{
    IntPolynomial p = primitive_part(f);
    if (!p.is_zero() && p.leading() < 0)
        p = -p;
    return p;
}

bool is_canonical(IntPolynomial const& f) { return !f.is_zero() && f.leading() > 0 && content(f) == 1; }

Integer norm_inf(IntPolynomial const& f)
{
    Integer m = 0;
    for (auto const& a : f.coeffs())
        if (abs(a) > m)
            m = abs(a);
    return m;
}

Integer norm2_sq(IntPolynomial const& f)
{
    Integer s = 0;
    for (auto const& a : f.coeffs())
        s += a * a;
    return s;
}

RatPolynomial to_rational(IntPolynomial const& f)
{
    std::vector<Rational> c;
    c.reserve(f.coeffs().size());
    for (auto const& a : f.coeffs())
        c.emplace_back(a);
    return RatPolynomial(std::move(c));
}

IntPolynomial clear_denominators(RatPolynomial const& f)
{
    Integer l = 1;
    for (auto const& a : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(f.coeffs().size());
    for (auto const& a : f.coeffs())
        c.push_back(a.get_num() * (l / a.get_den()));
    return primitive_part(IntPolynomial(std::move(c)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(RatPolynomial const& a, RatPolynomial const& b)
{
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    int db = b.degree();
    std::vector<Rational> r(a.coeffs());
    if (a.degree() < db)
        return {RatPolynomial(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    r.resize(db);
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial monic(RatPolynomial const& f)
{
    if (f.is_zero())
        return f;
    return Rational(1 / f.leading()) * f;
}

IntPolynomial pseudo_remainder(IntPolynomial const& a, IntPolynomial const& b)
{
    int db = b.degree();
    if (db < 0)
        throw InvalidInput("pseudo-remainder by zero");
    std::vector<Integer> r(a.coeffs());
    int da = a.degree();
    if (da < db)
        return a;
    Integer lb = b.leading();
    int e = da - db + 1;
    for (int i = da; i >= db; --i) {
        Integer t = r[i];
        for (auto& v : r)
            v *= lb;
        --e;
        if (t != 0)
            for (int j = 0; j <= db; ++j)
                r[i - db + j] -= t * b[j];
        r.pop_back();
    }
    if (e > 0) {
        Integer m = ipow(lb, e);
        for (auto& v : r)
            v *= m;
    }
    return IntPolynomial(std::move(r));
}

bool exact_divide(IntPolynomial const& a, IntPolynomial const& b, IntPolynomial* q)
{
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    if (a.is_zero()) {
        if (q)
            *q = IntPolynomial();
        return true;
    }
    int da = a.degree(), db = b.degree();
    if (da < db)
        return false;
    std::vector<Integer> r(a.coeffs());
    std::vector<Integer> qq(da - db + 1);
    Integer const& lb = b.leading();
    for (int i = da; i >= db; --i) {
        if (r[i] == 0)
            continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
            return false;
        Integer t;
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        qq[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0)
            return false;
    if (q)
        *q = IntPolynomial(std::move(qq));
    return true;
}

IntPolynomial exact_quotient(IntPolynomial const& a, IntPolynomial const& b)
{
    IntPolynomial q;
    if (!exact_divide(a, b, &q))
        throw std::logic_error("exact_quotient: not divisible");
    return q;
}

IntPolynomial gcd(IntPolynomial const& a0, IntPolynomial const& b0)
{
    IntPolynomial a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return canonical(a);
}

RatPolynomial gcd(RatPolynomial const& a0, RatPolynomial const& b0)
{
    RatPolynomial a = a0, b = b0;
    while (!b.is_zero()) {
        RatPolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

Integer resultant(IntPolynomial const& a0, IntPolynomial const& b0)
{
    if (a0.is_zero() || b0.is_zero())
        return 0;
    IntPolynomial A = a0, B = b0;
    Integer s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1)
            s = -1;
    }
    if (B.degree() == 0)
        return s * ipow(B[0], A.degree());
    Integer ca = content(A), cb = content(B);
    Integer t = ipow(ca, B.degree()) * ipow(cb, A.degree());
    A = primitive_part(A);
    B = primitive_part(B);
    Integer g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1)
            s = -s;
        IntPolynomial R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.is_zero())
            return 0;
        Integer den = g * ipow(h, delta);
        std::vector<Integer> c(R.coeffs());
        for (auto& v : c)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
        B = IntPolynomial(std::move(c));
        g = A.leading();
        if (delta == 0) {
        } else if (delta == 1)
            h = g;
        else {
            Integer num = ipow(g, delta);
            Integer d2 = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), d2.get_mpz_t());
        }
        if (B.degree() <= 0)
            break;
    }
    int da = A.degree();
    Integer lb = B.leading();
    // h <- h^(1-da) * lb^da
    Integer num = ipow(lb, da);
    if (da >= 1) {
        Integer d2 = ipow(h, da - 1);
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), d2.get_mpz_t());
    } else
        h = num;
    return s * t * h;
}

Integer poly_discriminant(IntPolynomial const& f)
{
    int d = f.degree();
    if (d < 1)
        throw InvalidInput("discriminant of a constant polynomial");
    Integer r = resultant(f, f.derivative());
    Integer q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((d * (d - 1) / 2) % 2 == 1)
        q = -q;
    return q;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(IntPolynomial const& f0)
{
    if (f0.is_zero())
        throw InvalidInput("squarefree decomposition of zero");
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = canonical(f0);
    if (f.degree() == 0)
        return out;
    IntPolynomial fp = f.derivative();
    IntPolynomial g = gcd(f, fp);
    IntPolynomial c = exact_quotient(f, g);
    IntPolynomial d = exact_quotient(fp, g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        IntPolynomial a = gcd(c, d);
        if (a.degree() > 0)
            out.emplace_back(canonical(a), i);
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - c.derivative();
    }
    return out;
}

IntPolynomial squarefree_part(IntPolynomial const& f)
{
    IntPolynomial r{1};
    for (auto const& [s, i] : squarefree_decomposition(f))
        r *= s;
    return canonical(r);
}

bool is_squarefree(IntPolynomial const& f)
{
    if (f.degree() <= 1)
        return !f.is_zero();
    return gcd(f, f.derivative()).degree() == 0;
}

RatPolynomial interpolate(std::vector<Rational> const& xs, std::vector<Rational> const& ys)
{
    // Newton divided differences
    size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    RatPolynomial r;
    for (size_t k = n; k-- > 0;) {
        r = r * RatPolynomial(std::vector<Rational>{-xs[k], Rational(1)}) + RatPolynomial::constant(dd[k]);
    }
    return r;
}

} // namespace hc
