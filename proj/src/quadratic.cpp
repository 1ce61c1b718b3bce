#include "heightcensus/quadratic.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace hc {

Integer field_discriminant(NumberField const& K)
{
    if (K.degree() == 1)
        return 1;
    if (K.degree() != 2)
        throw InvalidInput("not a quadratic field");
    return fundamental_discriminant(poly_discriminant(K.generator()));
}

IntPolynomial quadratic_generator(Integer const& D)
{
    if (!is_fundamental_discriminant(D) || D == 1)
        throw InvalidInput("not a fundamental discriminant: " + to_string(D));
    if (D % 4 == 0)
        return IntPolynomial(std::vector<Integer>{-D / 4, 0, 1});
    return IntPolynomial(std::vector<Integer>{(1 - D) / 4, -1, 1});
}

namespace {

/* floor((P + sqrt R) / Q) for non-square R */
Integer cf_floor(Integer const& P, Integer const& Q, Integer const& sR)
{
    if (Q > 0) {
        Integer n = P + sR;
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), Q.get_mpz_t());
        return r;
    }
    Integer aq = -Q, n = P + sR, r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), aq.get_mpz_t());
    return -r - 1;
}

} // namespace

FundamentalUnit fundamental_unit(Integer const& D)
{
    if (D <= 1 || !is_fundamental_discriminant(D))
        throw InvalidInput("fundamental_unit needs a positive fundamental discriminant");
    bool odd = D % 4 != 0;
    // omega = (P + sqrt R) / Q
    Integer R = odd ? D : D / 4, P = odd ? 1 : 0, Q = odd ? 2 : 1;
    Integer tr = odd ? 1 : 0, nm = odd ? Integer((1 - D) / 4) : Integer(-R);
    Integer sR = isqrt(R);
    Integer p0 = 1, p1 = 0, q0 = 0, q1 = 1; // p_{k-1}, p_{k-2}, ...
    for (int it = 0; it < 100000; ++it) {
        Integer a = cf_floor(P, Q, sR);
        Integer p = a * p0 + p1, q = a * q0 + q1;
        p1 = p0;
        p0 = p;
        q1 = q0;
        q0 = q;
        // norm of p - q omega = x + y omega with x = p, y = -q
        Integer N = p * p - tr * p * q + nm * q * q;
        if (q > 0 && (N == 1 || N == -1)) {
            FundamentalUnit u;
            // the large conjugate p - q omega'
            u.t = odd ? Integer(2 * p - q) : Integer(2 * p);
            u.u = q;
            u.norm = N.get_si();
            if (u.t < 0)
                u.t = -u.t;
            return u;
        }
        // next complete quotient: 1 / ((P + sqrt R)/Q - a)
        Integer Pn = a * Q - P;
        Integer Qn = (R - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
    throw std::logic_error("continued fraction did not reach a unit");
}

long class_number_forms(Integer const& Din)
{
    if (!is_fundamental_discriminant(Din) || Din == 1)
        throw InvalidInput("class_number_forms needs a fundamental discriminant");
    long D = Din.get_si();
    if (D < 0) {
        long h = 0, n = -D;
        for (long a = 1; 3 * a * a <= n; ++a)
            for (long b = -a + 1; b <= a; ++b) {
                long num = b * b - D;
                if (num % (4 * a))
                    continue;
                long c = num / (4 * a);
                if (c < a)
                    continue;
                if (c == a && b < 0)
                    continue;
                if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                    continue;
                ++h;
            }
        return h;
    }
    // reduced indefinite forms: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b
    long r = isqrt(Din).get_si();
    using Form = std::tuple<long, long, long>;
    std::set<Form> reduced;
    for (long b = 1; b <= r; ++b) {
        if ((b - D) % 2)
            continue;
        long num = b * b - D; // = 4ac < 0
        for (long A = (r - b + 2) / 2; 2 * A <= r + b; ++A) {
            if (2 * A < r - b + 1)
                continue;
            for (long a : {A, -A}) {
                if (num % (4 * a))
                    continue;
                long c = num / (4 * a);
                if (std::gcd(std::gcd(std::labs(a), b), std::labs(c)) != 1)
                    continue;
                reduced.emplace(a, b, c);
            }
        }
    }
    auto rho = [&](Form const& f) {
        auto [a, b, c] = f;
        long m = 2 * std::labs(c);
        // b' = -b mod 2|c|, with r + 1 - 2|c| <= b' <= r
        long lo = r + 1 - m;
        long bp = ((-b - lo) % m + m) % m + lo;
        long cp = (bp * bp - D) / (4 * c);
        return Form(c, bp, cp);
    };
    long cycles = 0;
    std::set<Form> seen;
    for (auto const& f : reduced) {
        if (seen.count(f))
            continue;
        ++cycles;
        Form g = f;
        do {
            seen.insert(g);
            g = rho(g);
        } while (!seen.count(g));
    }
    int nu = fundamental_unit(Din).norm;
    return nu == -1 ? cycles : cycles / 2;
}

long class_number_dirichlet(Integer const& D)
{
    for (mpfr_prec_t prec = 96; prec <= precision_cap(); prec *= 2) {
        mpfr_prec_t p = prec + 16;
        Interval L = dirichlet_l1(D, prec);
        Interval sq = sqrt(abs(Interval(D, p)));
        Interval h(p);
        if (D < 0) {
            long w = D == -4 ? 4 : (D == -3 ? 6 : 2);
            h = Interval(w, p) * sq * L / (Interval(2L, p) * Interval::pi(p));
        } else {
            FundamentalUnit u = fundamental_unit(D);
            Interval eps = (Interval(u.t, p) + Interval(u.u, p) * sq) / Interval(2L, p);
            h = sq * L / (Interval(2L, p) * log(eps));
        }
        Integer n = floor_q(h.lower() + Rational(1, 2));
        if (h.certainly_greater(Rational(n) - Rational(1, 2)) && h.certainly_less(Rational(n) + Rational(1, 2)))
            return n.get_si();
    }
    throw PrecisionExhausted("class number rounding did not certify");
}

QuadraticInvariants quadratic_invariants(Integer const& D, mpfr_prec_t prec)
{
    if (!is_fundamental_discriminant(D) || D == 1)
        throw InvalidInput("not a fundamental discriminant: " + to_string(D));
    QuadraticInvariants q;
    q.disc = D;
    if (D < 0) {
        q.r = 0;
        q.s = 1;
        q.w = D == -4 ? 4 : (D == -3 ? 6 : 2);
        q.h = class_number_forms(D);
        q.regulator = CertifiedReal(Rational(0));
    } else {
        q.r = 2;
        q.s = 0;
        q.w = 2;
        q.unit = fundamental_unit(D);
        Interval sq = sqrt(Interval(D, prec));
        Interval eps = (Interval(q.unit.t, prec) + Interval(q.unit.u, prec) * sq) / Interval(2L, prec);
        q.regulator = CertifiedReal::from(log(eps));
        q.h = class_number_dirichlet(D);
    }
    return q;
}

QuadraticInvariants quadratic_invariants(NumberField const& K, mpfr_prec_t prec)
{
    if (K.degree() != 2)
        throw InvalidInput("quadratic_invariants needs a quadratic field");
    return quadratic_invariants(field_discriminant(K), prec);
}

std::vector<Integer> fundamental_discriminants(long bound)
{
    std::vector<Integer> out;
    for (long a = 3; a <= bound; ++a)
        for (long d : {-a, a})
            if (is_fundamental_discriminant(Integer(d)))
                out.emplace_back(d);
    return out;
}

std::vector<NumberField> enumerate_quadratic_fields(long bound)
{
    std::vector<NumberField> out;
    for (auto const& D : fundamental_discriminants(bound))
        out.push_back(make_field(quadratic_generator(D)));
    return out;
}

CertifiedReal dedekind_zeta_quadratic(NumberField const& K, long s, Rational const& eps)
{
    if (K.degree() > 2)
        throw InvalidInput("dedekind_zeta_quadratic needs a field of degree <= 2");
    if (s < 2 || eps <= 0)
        throw InvalidInput("need s >= 2 and eps > 0");
    Integer D = field_discriminant(K);
    long bits = 64;
    for (Rational t = eps; t < 1; t *= 2)
        ++bits;
    for (mpfr_prec_t p = bits; p <= 4 * precision_cap(); p *= 2) {
        CertifiedReal z = CertifiedReal::from(dedekind_zeta(D, s, p));
        if (z.width() <= eps * z.lo)
            return z;
    }
    throw PrecisionExhausted("zeta enclosure did not reach the requested width");
}

} // namespace hc
