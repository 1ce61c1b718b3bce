#include "heightcensus/heights.hpp"
#include "heightcensus/enumerate.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/quadratic.hpp"

#include <algorithm>

namespace hc {

namespace {

mpfr_prec_t bits_for(Rational const& eps)
{
    long b = (long)mpz_sizeinbase(eps.get_den().get_mpz_t(), 2) - (long)mpz_sizeinbase(eps.get_num().get_mpz_t(), 2);
    return (mpfr_prec_t)std::max(64L, b + 48);
}

int sgn(Rational const& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

/* sign(P + Q sqrt(k)), k >= 0 */
int sign_qsqrt(Rational const& P, Rational const& Q, Rational const& k)
{
    int sp = sgn(P), sq = k > 0 ? sgn(Q) : 0;
    if (sq == 0)
        return sp;
    if (sp == 0 || sp == sq)
        return sq;
    return sp * sgn(P * P - Q * Q * k);
}

/* sign(A + B sqrt(m) + C sqrt(n)), m, n >= 0 */
int sign3(Rational const& A, Rational const& B, Rational const& m, Rational const& C, Rational const& n)
{
    int sb = m > 0 ? sgn(B) : 0, sc = n > 0 ? sgn(C) : 0;
    int ts;
    if (sb == 0)
        ts = sc;
    else if (sc == 0 || sb == sc)
        ts = sb;
    else
        ts = sb * sgn(B * B * m - C * C * n);
    int sa = sgn(A);
    if (ts == 0)
        return sa;
    if (sa == 0 || sa == ts)
        return ts;
    int d = sign_qsqrt(A * A - B * B * m - C * C * n, -2 * B * C, m * n);
    return d > 0 ? sa : (d < 0 ? ts : 0);
}

/* M = p + s sqrt(q) for degree <= 2 */
struct SmallMahler {
    Rational p, s, q;
};

SmallMahler small_mahler(IntPolynomial const& D)
{
    if (D.degree() > 2)
        throw CapExceeded("closed-form Mahler measure needs degree <= 2");
    if (auto m = mahler_exact(D))
        return {*m, 0, 0};
    // real roots on both sides of the unit circle: M = (|b| + sqrt(disc)) / 2
    Integer b = abs(D[1]);
    return {Rational(b, 2), Rational(1, 2), Rational(poly_discriminant(D))};
}

Rational lcm_den(std::vector<Rational> const& v)
{
    Integer L = 1;
    for (auto const& q : v)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(L);
}

Interval cabs(CInterval const& z) { return abs(z); }

/* one square root of w; empty when the enclosure is too wide to choose a branch */
std::optional<CInterval> csqrt(CInterval const& w)
{
    mpfr_prec_t p = w.re.prec();
    Interval r = abs(w);
    Interval two(2, p);
    if (!w.re.certainly_negative()) {
        Interval t = (r + w.re) / two;
        if (t.certainly_positive()) {
            Interval sre = sqrt(t);
            return CInterval(sre, w.im / (two * sre));
        }
    }
    Interval t = (r - w.re) / two;
    if (t.certainly_positive()) {
        Interval sim = sqrt(t);
        return CInterval(w.im / (two * sim), sim);
    }
    return std::nullopt;
}

CInterval at_prec(CInterval const& z, mpfr_prec_t p)
{
    return CInterval(Interval(z.re.lower(), z.re.upper(), p), Interval(z.im.lower(), z.im.upper(), p));
}

Interval max1(Interval const& a) { return max(a, Interval(1, a.prec())); }

/* M of x^2 + b x + c, or x + c, with boxed complex coefficients */
std::optional<Interval> monic_small_mahler(std::vector<CInterval> const& c, bool double_root)
{
    mpfr_prec_t p = c[0].re.prec();
    if (c.size() == 2)
        return max1(cabs(c[0]));
    CInterval const& b = c[1];
    Interval half(Rational(1, 2), p);
    if (double_root) {
        Interval m = max1(half * cabs(b));
        return m * m;
    }
    CInterval w = b * b - Interval(4, p) * c[0];
    auto s = csqrt(w);
    if (!s)
        return std::nullopt;
    CInterval z1 = half * (*s - b), z2 = half * (CInterval(Interval(p), Interval(p)) - *s - b);
    return max1(cabs(z1)) * max1(cabs(z2));
}

struct QuadBasis {
    Rational D, sigma, a, b, f;
};

QuadBasis quad_basis(NumberField const& K)
{
    IntPolynomial const& g = K.generator();
    QuadBasis qb;
    qb.D = Rational(field_discriminant(K));
    Integer Dz = qb.D.get_num();
    qb.sigma = (Dz % 4 == 0) ? 0 : 1;
    qb.a = Rational(g[2]);
    qb.b = Rational(g[1]);
    Integer f2 = poly_discriminant(g) / Dz, f;
    if (!is_square(f2, &f))
        throw InvalidInput("inconsistent quadratic field data");
    qb.f = Rational(f);
    return qb;
}

/* coordinates of alpha in the basis (1, omega) of the maximal order */
std::pair<Rational, Rational> omega_coords(FieldElement const& al, QuadBasis const& qb)
{
    Rational p = al.coord(0), q = al.coord(1);
    // theta = (f sqrt(D) - b) / (2a), sqrt(D) = 2 omega - sigma
    Rational u = p - q * qb.b / (2 * qb.a), v = q * qb.f / (2 * qb.a);
    return {u - v * qb.sigma, 2 * v};
}

} // namespace

Rational default_height_eps() { return Rational(1, ipow(10, 30)); }

AlgebraicNumber make_algebraic(IntPolynomial const& D, int root_index)
{
    if (D.degree() < 1 || !is_canonical(D))
        throw InvalidInput("minimal polynomial must be canonical of degree >= 1");
    if (root_index < 0 || root_index >= D.degree())
        throw InvalidInput("root index out of range");
    if (D.degree() > 1 && !is_irreducible(D))
        throw InvalidInput("minimal polynomial must be irreducible: " + to_csv(D));
    return {D, root_index};
}

AlgebraicNumber rational_number(Rational const& q)
{
    return {IntPolynomial(std::vector<Integer>{-q.get_num(), q.get_den()}), 0};
}

HeightValue height_of_polynomial(IntPolynomial const& D, Rational const& eps)
{
    HeightValue h;
    int d = h.degree = D.degree();
    mpfr_prec_t p = bits_for(eps);
    std::optional<Rational> mx = mahler_exact(D);
    CertifiedReal M;
    if (mx)
        M = CertifiedReal(*mx);
    else {
        M = mahler_measure(D, eps / 2);
        if (M.is_exact())
            mx = M.lo;
    }
    h.mahler = mx;
    if (mx) {
        Integer rn, rd;
        if (d == 1)
            h.value = CertifiedReal(*mx);
        else if (mpz_root(rn.get_mpz_t(), mx->get_num().get_mpz_t(), d) &&
                 mpz_root(rd.get_mpz_t(), mx->get_den().get_mpz_t(), d))
            h.value = CertifiedReal(Rational(rn, rd));
        else
            h.value = CertifiedReal::from(root(Interval(*mx, p), d));
        return h;
    }
    h.value = CertifiedReal::from(root(M.to_interval(p), d));
    return h;
}

HeightValue height(AlgebraicNumber const& a, Rational const& eps) { return height_of_polynomial(a.minpoly, eps); }

Integer naive_height(AlgebraicNumber const& a) { return norm_inf(a.minpoly); }

bool check_height_sandwich(AlgebraicNumber const& a)
{
    int d = a.degree();
    Integer nh = norm_inf(a.minpoly), p2 = ipow(2, d);
    return compare_mahler(a.minpoly, Rational(nh * p2)) != Cmp::GT &&
           compare_mahler(a.minpoly, Rational(nh, p2)) != Cmp::LT;
}

CertifiedReal m0(KPoly const& f, Rational const& eps)
{
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInput("M0 needs a monic polynomial of degree >= 1");
    auto fz = factor_over_field(f);
    Rational sub = eps / (8 * f.degree() * f.field().degree());
    mpfr_prec_t p = bits_for(sub);
    Interval acc(1, p);
    Rational exact = 1;
    bool all_exact = true;
    for (auto const& [h, mult] : fz) {
        // every root of h has the same minimal polynomial D over Q
        Factorization nf = factor_over_rationals(clear_denominators(norm(h)));
        IntPolynomial const& D = nf.factors.front().first;
        Rational ex(h.degree() * mult, D.degree());
        CertifiedReal M;
        if (auto mx = mahler_exact(D))
            M = CertifiedReal(*mx);
        else
            M = mahler_measure(D, sub);
        if (M.is_exact() && ex.get_den() == 1)
            exact *= qpow(M.lo, ex.get_num().get_si());
        else
            all_exact = false;
        acc = acc * pow(M.to_interval(p), ex);
    }
    if (all_exact)
        return CertifiedReal(exact);
    return CertifiedReal::from(acc);
}

Rational ideal_norm(NumberField const& K, std::vector<FieldElement> const& gens)
{
    std::vector<std::pair<Rational, Rational>> vecs;
    if (K.degree() == 1) {
        std::vector<Rational> v;
        for (auto const& a : gens)
            if (!a.is_zero())
                v.push_back(a.rational_value());
        if (v.empty())
            throw InvalidInput("ideal of zero elements");
        Rational L = lcm_den(v);
        Integer g = 0;
        for (auto const& q : v) {
            Rational t = q * L;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num().get_mpz_t());
        }
        return Rational(g) / L;
    }
    if (K.degree() != 2)
        throw CapExceeded("ideal norms are implemented for fields of degree <= 2");
    QuadBasis qb = quad_basis(K);
    for (auto const& a : gens) {
        if (a.is_zero())
            continue;
        auto [x, y] = omega_coords(a, qb);
        vecs.push_back({x, y});
        // alpha * omega, with omega^2 = sigma omega + (D - sigma) / 4
        vecs.push_back({y * (qb.D - qb.sigma) / 4, x + y * qb.sigma});
    }
    if (vecs.empty())
        throw InvalidInput("ideal of zero elements");
    std::vector<Rational> all;
    for (auto const& [x, y] : vecs) {
        all.push_back(x);
        all.push_back(y);
    }
    Rational L = lcm_den(all);
    Integer g = 0;
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = i + 1; j < vecs.size(); ++j) {
            Rational m = (vecs[i].first * vecs[j].second - vecs[i].second * vecs[j].first) * L * L;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_num().get_mpz_t());
        }
    return Rational(g) / (L * L);
}

CertifiedReal m0_adelic(KPoly const& f, Rational const& eps)
{
    NumberField const& K = f.field();
    if (K.degree() != 2)
        throw InvalidInput("the adelic M0 route needs a quadratic field");
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInput("M0 needs a monic polynomial of degree >= 1");
    std::vector<FieldElement> gens = f.coeffs();
    Rational Nfin = ideal_norm(K, gens);
    Rational sub = eps / 8;
    for (mpfr_prec_t p = bits_for(sub); p <= precision_cap(); p *= 2) {
        Interval inf(p);
        if (f.degree() <= 2) {
            bool dbl = false;
            if (f.degree() == 2)
                dbl = (f[1] * f[1] - K.element(Rational(4)) * f[0]).is_zero();
            auto emb = K.embeddings(Rational(1, Integer(1) << (p + 8)));
            std::vector<Interval> per;
            bool ok = true;
            for (auto const& disk : emb) {
                CInterval th = at_prec(disk.box(), p);
                std::vector<CInterval> c;
                for (int i = 0; i < f.degree(); ++i)
                    c.push_back(embed(f[i], th));
                c.push_back(CInterval(Interval(1, p), Interval(p)));
                auto m = monic_small_mahler(c, dbl);
                if (!m) {
                    ok = false;
                    break;
                }
                per.push_back(*m);
            }
            if (!ok)
                continue;
            // a complex place has local degree 2 and contributes M(sigma f)^(2/2)
            inf = K.complex_places() == 1 ? per[0] : sqrt(per[0] * per[1]);
        } else {
            IntPolynomial Dz = clear_denominators(norm(f));
            CertifiedReal M = mahler_measure(Dz, sub);
            inf = sqrt(M.to_interval(p) / Interval(Dz.leading(), p));
        }
        Interval res = inf / sqrt(Interval(Nfin, p));
        if (res.relative_width() <= eps.get_d())
            return CertifiedReal::from(res);
    }
    throw PrecisionExhausted("adelic M0 did not reach the requested width");
}

CertifiedReal height_projective(std::vector<FieldElement> const& coords, Rational const& eps)
{
    if (coords.empty())
        throw InvalidInput("empty projective point");
    NumberField const& K = coords[0].field();
    bool nonzero = false;
    for (auto const& x : coords)
        nonzero |= !x.is_zero();
    if (!nonzero)
        throw InvalidInput("projective point with all coordinates zero");
    if (K.degree() == 1) {
        Rational mx = 0;
        for (auto const& x : coords)
            mx = std::max(mx, Rational(abs(x.rational_value())));
        return CertifiedReal(mx / ideal_norm(K, coords));
    }
    if (K.degree() != 2)
        throw CapExceeded("projective heights are implemented for fields of degree <= 2");
    Rational Nf = ideal_norm(K, coords);
    for (mpfr_prec_t p = bits_for(eps / 8); p <= precision_cap(); p *= 2) {
        Interval prod(1, p);
        for (auto const& disk : K.embeddings(Rational(1, Integer(1) << (p + 8)))) {
            CInterval th = at_prec(disk.box(), p);
            Interval m(0, p);
            for (auto const& x : coords)
                m = max(m, abs(embed(x, th)));
            prod = prod * m;
        }
        Interval res = sqrt(prod / Interval(Nf, p));
        if (res.relative_width() <= eps.get_d())
            return CertifiedReal::from(res);
    }
    throw PrecisionExhausted("projective height did not reach the requested width");
}

Cmp compare_mahler_small(IntPolynomial const& a, IntPolynomial const& b)
{
    SmallMahler x = small_mahler(a), y = small_mahler(b);
    int s = sign3(x.p - y.p, x.s, x.q, -y.s, y.q);
    return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

namespace {

bool generates(IntPolynomial const& D, NumberField const& K, Integer const& disc)
{
    if (K.degree() == 2)
        return fundamental_discriminant(poly_discriminant(D)) == disc;
    return field_equals(make_field(D), K);
}

/* exact comparison of M for two polynomials of the same degree */
Cmp compare_same_degree(IntPolynomial const& a, IntPolynomial const& b)
{
    if (a.degree() <= 2)
        return compare_mahler_small(a, b);
    IntPolynomial ra = canonical(a.reversed());
    if (ra == b || (a == b))
        return Cmp::EQ;
    for (long bits = 64; bits <= precision_cap(); bits *= 2) {
        Rational eps(1, Integer(1) << bits);
        CertifiedReal x = mahler_measure(a, eps), y = mahler_measure(b, eps);
        if (x.hi < y.lo)
            return Cmp::LT;
        if (y.hi < x.lo)
            return Cmp::GT;
        if (x.is_exact() && y.is_exact() && x.lo == y.lo)
            return Cmp::EQ;
    }
    throw PrecisionExhausted("could not separate two Mahler measures");
}

/* tie order: degree, then coefficients from the constant term up */
bool lex_less(IntPolynomial const& a, IntPolynomial const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

Integer disc_or_zero(NumberField const& K) { return K.degree() == 2 ? field_discriminant(K) : Integer(0); }

} // namespace

MinimalGenerator delta_exact(NumberField const& K, Rational const& search_cap)
{
    int e = K.degree();
    if (e < 2)
        throw InvalidInput("delta needs a field of degree >= 2");
    IntPolynomial const& g = K.generator();
    HeightValue U = height_of_polynomial(g, Rational(1, 1000000));
    if (U.value.lo > search_cap)
        throw CapExceeded("height of the field generator exceeds the search cap");
    Rational B = U.mahler ? *U.mahler : mahler_measure(g, Rational(1, 1000000)).hi;
    Integer disc = disc_or_zero(K);
    MinimalGenerator out;
    std::optional<IntPolynomial> best;
    EnumConfig cfg;
    enumerate_polynomials(e, B, cfg, [&](int, IntPolynomial const& D) {
        if (!generates(D, K, disc))
            return;
        ++out.candidates;
        if (!best) {
            best = D;
            return;
        }
        Cmp c = compare_same_degree(D, *best);
        if (c == Cmp::LT || (c == Cmp::EQ && lex_less(D, *best)))
            best = D;
    });
    if (!best)
        throw InvalidInput("no generator found below the generator's own height");
    out.delta = height_of_polynomial(*best, default_height_eps());
    out.witness = {*best, e - 1};
    return out;
}

NaiveMinimalGenerator pi_exact(NumberField const& K, Integer const& search_cap)
{
    int e = K.degree();
    if (e < 2)
        throw InvalidInput("pi needs a field of degree >= 2");
    Integer P = norm_inf(K.generator());
    if (P > search_cap)
        throw CapExceeded("naive height of the field generator exceeds the search cap");
    Integer disc = disc_or_zero(K);
    long L = P.get_si();
    std::optional<IntPolynomial> best;
    Integer bestH;
    std::vector<Integer> c(e + 1);
    for (long lead = 1; lead <= L; ++lead) {
        c[e] = lead;
        for (int i = 0; i < e; ++i)
            c[i] = -L;
        while (true) {
            IntPolynomial D(c);
            if (c[0] != 0 && content(D) == 1) {
                Integer h = norm_inf(D);
                bool better = !best || h < bestH || (h == bestH && lex_less(D, *best));
                if (better && is_irreducible(D) && generates(D, K, disc)) {
                    best = D;
                    bestH = h;
                }
            }
            int i = 0;
            while (i < e && c[i] == L) {
                c[i] = -L;
                ++i;
            }
            if (i == e)
                break;
            ++c[i];
        }
    }
    return {bestH, {*best, e - 1}};
}

SilvermanCheck check_silverman(NumberField const& K)
{
    if (K.degree() != 2)
        throw CapExceeded("the Silverman check is implemented for quadratic fields");
    MinimalGenerator mg = delta_exact(K, Rational(1000000));
    Rational q = Rational(abs(field_discriminant(K))) / 4;
    // delta^4 = M^2 against |disc| / 4
    SmallMahler m = small_mahler(mg.witness.minpoly);
    int s = sign3(m.p * m.p + m.s * m.s * m.q - q, 2 * m.p * m.s, m.q, 0, 0);
    SilvermanCheck out;
    out.holds = s >= 0;
    out.equality = s == 0;
    out.lhs = mg.delta.value;
    out.rhs = CertifiedReal::from(root(Interval(q, 128), 4));
    return out;
}

CertifiedReal regulator_class_ratio(NumberField const& K, HeightValue const& delta)
{
    if (K.degree() != 2)
        throw CapExceeded("class numbers are implemented for quadratic fields");
    QuadraticInvariants inv = quadratic_invariants(K);
    mpfr_prec_t p = 128;
    Interval R = inv.s == 1 ? Interval(1, p) : inv.regulator.to_interval(p);
    Interval num = R * Interval(Integer(inv.h), p);
    return CertifiedReal::from(num / pow(delta.value.to_interval(p), Rational(41, 20)));
}

bool check_primitive_point_bound(std::vector<FieldElement> const& coords, HeightValue const& delta)
{
    int e = coords.at(0).field().degree();
    Rational scale(1, e * (long)coords.size());
    for (Rational eps(1, 1000000); eps > Rational(1, ipow(10, 40)); eps /= 1000000) {
        CertifiedReal hp = height_projective(coords, eps);
        if (hp.lo >= delta.value.hi * scale)
            return true;
        if (hp.hi < delta.value.lo * scale)
            return false;
    }
    return false;
}

} // namespace hc
