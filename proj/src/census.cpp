#include "heightcensus/census.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/mahler.hpp"
#include "heightcensus/quadratic.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace hc {

char const* to_string(ClassTag t)
{
    switch (t) {
    case ClassTag::not_primitive:
        return "not_primitive";
    case ClassTag::lower_degree:
        return "lower_degree";
    case ClassTag::reducible:
        return "reducible";
    case ClassTag::ncp:
        return "ncp";
    case ClassTag::cp:
        return "cp";
    }
    return "?";
}

void ClassTally::add(ClassTag t)
{
    switch (t) {
    case ClassTag::not_primitive:
        ++not_primitive;
        break;
    case ClassTag::lower_degree:
        ++lower;
        break;
    case ClassTag::reducible:
        ++red;
        break;
    case ClassTag::ncp:
        ++ncp;
        break;
    case ClassTag::cp:
        ++cp;
        break;
    }
}

ClassTally& ClassTally::operator+=(ClassTally const& o)
{
    not_primitive += o.not_primitive;
    lower += o.lower;
    red += o.red;
    ncp += o.ncp;
    cp += o.cp;
    return *this;
}

bool disc_order(Integer const& a, Integer const& b)
{
    int c = cmp(abs(a), abs(b));
    return c != 0 ? c < 0 : a < b;
}

namespace {

std::vector<Integer> divisors(Integer const& n)
{
    std::vector<Integer> ds{1};
    if (n == 1)
        return ds;
    for (auto const& [p, e] : factor_integer(n)) {
        size_t k = ds.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < k; ++j)
                ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_prime_small(int e)
{
    for (int d = 2; d * d <= e; ++d)
        if (e % d == 0)
            return false;
    return e >= 2;
}

/* degree over Q of the field generated by the elements (all in one field L) */
int generated_degree(std::vector<FieldElement> const& gens)
{
    if (gens.empty())
        return 1;
    NumberField const& L = gens[0].field();
    int e = L.degree(), best = 1;
    if (e == 1)
        return 1;
    // each pair of distinct embeddings rules out at most (#gens - 1) values of j
    long jmax = (long)e * e * (long)gens.size() + 1;
    for (long j = 0; j <= jmax && best < e; ++j) {
        FieldElement a = L.zero();
        Rational pw = 1;
        for (auto const& g : gens) {
            a += pw * g;
            pw *= j;
        }
        best = std::max(best, minpoly(a).degree());
    }
    return best;
}

bool divisible(Integer const& a, Integer const& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }

ClassTag tag_of(KPoly const& f, int n)
{
    if (!coefficients_generate(f))
        return ClassTag::not_primitive;
    if (f.degree() < n)
        return ClassTag::lower_degree;
    if (!is_irreducible_over(f))
        return ClassTag::reducible;
    return conjugate_polys(f).pairwise_coprime ? ClassTag::cp : ClassTag::ncp;
}

IntPolynomial norm_primitive(KPoly const& f) { return canonical(clear_denominators(norm(f))); }

/* for quadratic K: can N be prim(N_{K/Q} f)? Every rational factor of odd
 * multiplicity has to split over K. */
bool norm_prefilter(Factorization const& fz, Integer const& dK)
{
    for (auto const& [p, m] : fz.factors) {
        if (m % 2 == 0)
            continue;
        int d = p.degree();
        if (d % 2 == 1)
            return false;
        Integer disc = poly_discriminant(p);
        if (d == 2) {
            if (is_square(disc) || fundamental_discriminant(disc) != dK)
                return false;
        } else if (!divisible(disc, ipow(dK, d / 2)))
            return false;
    }
    return true;
}

struct PartialCensus {
    long long Z = 0, Zbar = 0, polys = 0;
    std::map<Integer, std::pair<long long, long long>> rows;
};

} // namespace

EnumStats enumerate_numbers(int d, Rational const& X, EnumConfig const& cfg0,
                            std::function<void(int, IntPolynomial const&)> const& visit)
{
    if (d < 1 || d > 6)
        throw InvalidInput("enumerate_numbers supports 1 <= d <= 6");
    if (X < 1)
        throw InvalidInput("X must be >= 1");
    EnumConfig cfg = cfg0;
    cfg.irreducible_only = true;
    return enumerate_polynomials(d, qpow(X, d), cfg, visit);
}

long long count_numbers(int d, Rational const& X, EnumConfig const& cfg)
{
    std::vector<long long> parts(std::max(1, cfg.workers), 0);
    enumerate_numbers(d, X, cfg, [&](int w, IntPolynomial const&) { parts[w] += d; });
    long long t = 0;
    for (auto v : parts)
        t += v;
    return t;
}

std::vector<NumberField> subfields_of_degree(IntPolynomial const& D, int e)
{
    int d = D.degree();
    if (d < 1 || e < 1 || d % e != 0)
        throw InvalidInput("subfield degree must divide the polynomial degree");
    if (!is_canonical(D))
        throw InvalidInput("subfields_of_degree needs a canonical polynomial");
    if (e == 1)
        return {NumberField()};
    if (e == d)
        return {make_field(D)};
    if (e != 2)
        throw CapExceeded("subfield detection is implemented for degrees 1, 2 and deg D");
    // disc(K)^(d/2) | disc(D) with d/2 >= 2, so |disc(K)| divides the square part
    Integer s = square_part_root(poly_discriminant(D));
    std::vector<NumberField> out;
    for (auto const& t : divisors(s)) {
        if (t < 3)
            continue;
        for (Integer dK : {Integer(-t), t}) {
            if (!is_fundamental_discriminant(dK))
                continue;
            NumberField K = make_field(quadratic_generator(dK));
            auto fz = factor_over_field(D, K);
            if (fz.size() < 2)
                continue;
            for (auto const& [h, m] : fz)
                if (h.degree() != d / 2 || m != 1)
                    throw std::logic_error("unexpected factorization over a quadratic field");
            out.push_back(K);
        }
    }
    std::sort(out.begin(), out.end(), [](NumberField const& a, NumberField const& b) {
        return disc_order(field_discriminant(a), field_discriminant(b));
    });
    return out;
}

IntPolynomial quartic_resolvent_cubic(IntPolynomial const& D)
{
    if (D.degree() != 4)
        throw InvalidInput("resolvent cubic needs a quartic");
    Rational a = D[4], b = Rational(D[3]) / a, c = Rational(D[2]) / a, d = Rational(D[1]) / a, e = Rational(D[0]) / a;
    // x = y - b/4
    Rational p = c - 3 * b * b / 8;
    Rational q = d - b * c / 2 + b * b * b / 8;
    Rational r = e - b * d / 4 + b * b * c / 16 - 3 * b * b * b * b / 256;
    RatPolynomial R(std::vector<Rational>{4 * p * r - q * q, -4 * r, -p, Rational(1)});
    return canonical(clear_denominators(R));
}

bool quartic_subfield_resolvent(IntPolynomial const& D) { return !is_irreducible(quartic_resolvent_cubic(D)); }

CensusReport count_Z(int e, int n, Rational const& X, CensusConfig const& cfg)
{
    if (e < 1 || n < 1)
        throw InvalidInput("e and n must be positive");
    if (e > 2)
        throw CapExceeded("censuses are implemented for e in {1, 2}");
    if (e == 2 && n < 2)
        throw InvalidInput("subfield censuses need n >= 2");
    if (e * n > 6)
        throw CapExceeded("censuses are limited to degree en <= 6");
    if (X < 1)
        throw InvalidInput("X must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    int d = e * n;
    CensusReport R;
    R.e = e;
    R.n = n;
    R.X = X;
    int W = std::max(1, cfg.workers);
    std::vector<PartialCensus> parts(W);
    EnumConfig ec;
    ec.workers = W;
    ec.candidate_cap = cfg.candidate_cap;
    EnumStats st = enumerate_numbers(d, X, ec, [&](int w, IntPolynomial const& D) {
        PartialCensus& P = parts[w];
        ++P.polys;
        if (e == 1) {
            P.Z += d;
            P.rows[Integer(1)].first += d;
            return;
        }
        auto subs = subfields_of_degree(D, e);
        if (subs.empty())
            return;
        P.Z += d;
        bool many = subs.size() > 1;
        if (many)
            P.Zbar += d;
        for (auto const& K : subs) {
            Integer dK = field_discriminant(K);
            auto& row = P.rows[dK];
            row.first += d;
            if (many)
                row.second += d;
        }
    });
    std::map<Integer, std::pair<long long, long long>> merged;
    for (auto const& P : parts) {
        R.Z += P.Z;
        R.Zbar += P.Zbar;
        R.polynomials += P.polys;
        for (auto const& [k, v] : P.rows) {
            merged[k].first += v.first;
            merged[k].second += v.second;
        }
    }
    for (auto const& [dK, v] : merged) {
        FieldRow row;
        row.disc = dK;
        row.field = dK == 1 ? NumberField() : make_field(quadratic_generator(dK));
        row.Z_K = v.first;
        row.Zbar_K = v.second;
        R.fields.push_back(std::move(row));
    }
    std::sort(R.fields.begin(), R.fields.end(), [](FieldRow const& a, FieldRow const& b) { return disc_order(a.disc, b.disc); });
    for (auto const& row : R.fields) {
        R.sum_ZK += row.Z_K;
        R.sum_ZbarK += row.Zbar_K;
    }
    R.residual = R.Z - (R.sum_ZK - R.sum_ZbarK) - R.Zbar;
    long long pow2 = 1LL << d;
    R.inequality_holds = R.Zbar <= R.sum_ZbarK && R.sum_ZbarK <= pow2 * R.Zbar;
    R.box = st.box_size;
    R.candidates = st.candidates;
    if (cfg.tallies) {
        EnumConfig tc;
        tc.workers = 1;
        tc.candidate_cap = cfg.candidate_cap;
        for (auto& row : R.fields) {
            row.tally = classify_all_over_K(row.field, n, qpow(X, n), tc);
            row.has_tally = true;
        }
    }
    R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

bool coefficients_generate(KPoly const& f)
{
    NumberField const& K = f.field();
    int e = K.degree();
    if (e == 1)
        return true;
    if (is_prime_small(e)) {
        for (auto const& c : f.coeffs())
            if (!c.is_rational())
                return true;
        return false;
    }
    return generated_degree(f.coeffs()) == e;
}

ClassTag classify_over_K(KPoly const& f, int n, Rational const& T)
{
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInput("classification needs a monic polynomial of degree >= 1");
    if (f.degree() > n)
        throw InvalidInput("polynomial degree exceeds n");
    int e = f.field().degree();
    if (compare_mahler(norm_primitive(f), qpow(T, e)) == Cmp::GT)
        throw InvalidInput("M0(f) exceeds T");
    return tag_of(f, n);
}

ClassTally classify_all_over_K(NumberField const& K, int n, Rational const& T, EnumConfig const& cfg0,
                               std::function<void(KPoly const&, ClassTag)> const& visit)
{
    int e = K.degree();
    if (n * e > kFieldFactorCap / std::max(1, e))
        throw CapExceeded("classification limited by the factorization cap");
    Integer dK = e == 2 ? field_discriminant(K) : Integer(0);
    EnumConfig cfg = cfg0;
    cfg.irreducible_only = false;
    cfg.nonzero_constant = false;
    int W = std::max(1, cfg.workers);
    std::vector<ClassTally> parts(W);
    std::vector<std::vector<std::pair<KPoly, ClassTag>>> seen(W);
    Rational B = qpow(T, e);
    for (int k = 1; k <= n; ++k) {
        enumerate_polynomials(e * k, B, cfg, [&](int w, IntPolynomial const& N) {
            Factorization fz = factor_over_rationals(N);
            if (e == 2 && !norm_prefilter(fz, dK))
                return;
            RatPolynomial target = monic(to_rational(N));
            auto kf = factor_over_field(N, K);
            // all monic divisors of degree k whose norm is N
            std::vector<int> a(kf.size(), 0);
            while (true) {
                int deg = 0;
                for (size_t i = 0; i < kf.size(); ++i)
                    deg += a[i] * kf[i].first.degree();
                if (deg == k) {
                    KPoly f(K, IntPolynomial{1});
                    for (size_t i = 0; i < kf.size(); ++i)
                        for (int j = 0; j < a[i]; ++j)
                            f = f * kf[i].first;
                    if (norm(f) == target) {
                        ClassTag t = tag_of(f, n);
                        parts[w].add(t);
                        if (visit)
                            seen[w].emplace_back(f, t);
                    }
                }
                size_t i = 0;
                while (i < kf.size() && a[i] == kf[i].second) {
                    a[i] = 0;
                    ++i;
                }
                if (i == kf.size())
                    break;
                ++a[i];
            }
        });
    }
    ClassTally out;
    for (auto const& p : parts)
        out += p;
    if (visit)
        for (auto const& s : seen)
            for (auto const& [f, t] : s)
                visit(f, t);
    return out;
}

Lemma61Check verify_lemma61(NumberField const& K, int n, Rational const& X, CensusConfig const& cfg)
{
    int e = K.degree();
    if (e < 2)
        throw InvalidInput("verify_lemma61 needs [K:Q] >= 2");
    Integer dK = e == 2 ? field_discriminant(K) : Integer(0);
    Integer dK2 = dK * dK;
    Lemma61Check out;
    std::vector<KPoly> mins;
    bool all_cp = true;
    EnumConfig ec;
    ec.candidate_cap = cfg.candidate_cap;
    enumerate_polynomials(e * n, qpow(X, e * n), ec, [&](int, IntPolynomial const& D) {
        if (e == 2 && !divisible(poly_discriminant(D), dK2))
            return;
        for (auto const& [h, m] : factor_over_field(D, K)) {
            if (h.degree() != n)
                continue;
            // the n roots of h are the numbers with [K(beta):K] = n
            out.Z_K += n;
            mins.push_back(h);
            if (tag_of(h, n) != ClassTag::cp)
                all_cp = false;
        }
    });
    std::vector<std::string> keys;
    for (auto const& h : mins)
        keys.push_back(to_string(h));
    std::sort(keys.begin(), keys.end());
    out.cp_count = std::unique(keys.begin(), keys.end()) - keys.begin();
    EnumConfig tc;
    tc.candidate_cap = cfg.candidate_cap;
    ClassTally t = classify_all_over_K(K, n, qpow(X, n), tc);
    out.tally_cp = t.cp;
    out.ok = all_cp && out.Z_K == n * out.cp_count && out.tally_cp == out.cp_count;
    return out;
}

bool verify_ncp_structure(KPoly const& f)
{
    NumberField const& K = f.field();
    int e = K.degree();
    if (e > 3)
        throw CapExceeded("ncp structure check needs [K:Q] <= 3");
    if (!f.is_monic() || tag_of(f, f.degree()) != ClassTag::ncp)
        throw InvalidInput("verify_ncp_structure needs an ncp polynomial");
    SplittingField S = splitting_field(K);
    FieldElement iota = S.theta_images[0];
    KPoly F = map_coefficients(f, iota);
    auto fz = factor_over_field(F);
    KPoly prod(S.L, IntPolynomial{1});
    for (auto const& [g, m] : fz) {
        if (m != 1 || g.degree() != fz[0].first.degree())
            return false;
        prod = prod * g;
    }
    if (prod != F)
        return false;
    // [K(coeffs g1) : K] must equal the number of conjugates of g1
    std::vector<FieldElement> gens = fz[0].first.coeffs();
    gens.push_back(iota);
    int lq = generated_degree(gens);
    if (lq % e != 0 || (int)fz.size() != lq / e)
        return false;
    Factorization nz = factor_over_rationals(norm_primitive(f));
    for (auto const& [p, m] : nz.factors)
        if (p.degree() >= e * f.degree())
            return false;
    return true;
}

long long count_relative(NumberField const& K, int n, Rational const& X, CensusConfig const& cfg)
{
    int e = K.degree();
    if (n < 1)
        throw InvalidInput("n must be positive");
    Integer dK = e == 2 ? field_discriminant(K) : Integer(0);
    Integer dK2 = dK * dK;
    int W = std::max(1, cfg.workers);
    std::vector<long long> parts(W, 0);
    for (int m = n + 1; m <= e * n; ++m) {
        // beta of degree m lies in K(beta) of degree en; m = n forces rational coefficients
        if ((e * n) % m != 0)
            continue;
        if (m * e > kFieldFactorCap)
            throw CapExceeded("relative count limited by the factorization cap");
        EnumConfig ec;
        ec.workers = W;
        ec.candidate_cap = cfg.candidate_cap;
        enumerate_polynomials(m, qpow(X, m), ec, [&](int w, IntPolynomial const& D) {
            if (e == 2 && m == e * n && !divisible(poly_discriminant(D), dK2))
                return;
            for (auto const& [h, mult] : factor_over_field(D, K))
                if (h.degree() == n && coefficients_generate(h))
                    parts[w] += n;
        });
    }
    long long total = 0;
    for (auto v : parts)
        total += v;
    return total;
}

BoundCheck verify_th4_bound(CensusReport const& r)
{
    int e = r.e, n = r.n;
    BoundCheck b;
    b.c = Integer(n) * ipow(2, e * (n * n + n * e + 2 * e + n + 13) + n * n + 10 * n);
    b.bound = Rational(b.c) * qpow(r.X, e * n * (n + e));
    b.margin = b.bound - Rational(Integer(std::to_string(r.Z)));
    b.holds = b.margin >= 0;
    return b;
}

std::string census_csv(CensusReport const& r, bool header)
{
    std::ostringstream os;
    if (header)
        os << "e,n,X,Z,Zbar,field_disc,Z_K,Zbar_K,cp,red,ncp,lower,not_primitive\n";
    std::string pre = std::to_string(r.e) + "," + std::to_string(r.n) + "," + to_string(r.X) + "," +
                      std::to_string(r.Z) + "," + std::to_string(r.Zbar) + ",";
    if (r.fields.empty())
        os << pre << ",,,,,,,\n";
    for (auto const& f : r.fields) {
        os << pre << to_string(f.disc) << "," << f.Z_K << "," << f.Zbar_K;
        if (f.has_tally)
            os << "," << f.tally.cp << "," << f.tally.red << "," << f.tally.ncp << "," << f.tally.lower << ","
               << f.tally.not_primitive;
        else
            os << ",,,,,";
        os << "\n";
    }
    return os.str();
}

} // namespace hc
