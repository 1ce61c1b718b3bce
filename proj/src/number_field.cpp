#include "heightcensus/number_field.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"

#include <algorithm>
#include <sstream>

namespace hc {

namespace {

RatPolynomial reduce_mod(RatPolynomial const& v, RatPolynomial const& gm)
{
    if (v.degree() < gm.degree())
        return v;
    return divmod(v, gm).second;
}

/* s with s*a = 1 mod m, for coprime a, m over Q */
RatPolynomial inverse_mod(RatPolynomial const& a, RatPolynomial const& m)
{
    RatPolynomial r0 = m, r1 = a, s0, s1 = RatPolynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPolynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        throw std::domain_error("element is not invertible");
    return reduce_mod(Rational(1) / r0[0] * s0, m);
}

} // namespace

NumberField::NumberField()
{
    static std::shared_ptr<Data const> const q = [] {
        auto d = std::make_shared<Data>();
        d->g = IntPolynomial{0, 1};
        d->gm = RatPolynomial{0, 1};
        d->r = 1;
        return d;
    }();
    d_ = q;
}

NumberField make_field(IntPolynomial const& g)
{
    if (g.degree() < 1 || !is_canonical(g))
        throw InvalidInput("field generator must be canonical of degree >= 1");
    if (g.degree() == 1 && g == IntPolynomial{0, 1})
        return NumberField();
    if (!is_irreducible(g))
        throw InvalidInput("field generator must be irreducible: " + to_csv(g));
    auto d = std::make_shared<NumberField::Data>();
    d->g = g;
    d->gm = monic(to_rational(g));
    d->r = count_real_roots(g);
    d->s = (g.degree() - d->r) / 2;
    NumberField K;
    K.d_ = std::move(d);
    return K;
}

FieldElement NumberField::theta() const { return element(RatPolynomial{0, 1}); }
FieldElement NumberField::element(Rational const& q) const { return FieldElement(*this, RatPolynomial::constant(q)); }
FieldElement NumberField::element(RatPolynomial const& v) const { return FieldElement(*this, v); }
FieldElement NumberField::zero() const { return FieldElement(*this, RatPolynomial()); }
FieldElement NumberField::one() const { return element(Rational(1)); }

std::vector<RootDisk> NumberField::embeddings(Rational const& rad) const
{
    return root_disks(d_->g, BigFloat(rad, 64, MPFR_RNDD));
}

FieldElement::FieldElement(NumberField K, RatPolynomial v) : K_(std::move(K)), v_(reduce_mod(v, K_.monic_generator())) {}

FieldElement operator+(FieldElement const& a, FieldElement const& b) { return FieldElement(a.K_, a.v_ + b.v_); }
FieldElement operator-(FieldElement const& a, FieldElement const& b) { return FieldElement(a.K_, a.v_ - b.v_); }
FieldElement operator*(FieldElement const& a, FieldElement const& b)
{
    if (a.v_.degree() <= 0 && !a.v_.is_zero())
        return FieldElement(b.K_, a.v_[0] * b.v_);
    if (b.v_.degree() <= 0 && !b.v_.is_zero())
        return FieldElement(a.K_, b.v_[0] * a.v_);
    return FieldElement(a.K_, a.v_ * b.v_);
}
FieldElement operator/(FieldElement const& a, FieldElement const& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero in a number field");
    if (v_.degree() == 0)
        return FieldElement(K_, RatPolynomial::constant(Rational(1) / v_[0]));
    return FieldElement(K_, inverse_mod(v_, K_.monic_generator()));
}

FieldElement FieldElement::pow(long k) const
{
    if (k < 0)
        return inverse().pow(-k);
    FieldElement r = K_.one(), b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Rational norm(FieldElement const& a)
{
    NumberField const& K = a.field();
    int e = K.degree();
    if (a.is_zero())
        return 0;
    if (a.is_rational()) {
        Rational q = a.rational_value(), r = 1;
        for (int i = 0; i < e; ++i)
            r *= q;
        return r;
    }
    RatPolynomial const& v = a.rep();
    Integer den = 1;
    for (auto const& c : v.coeffs())
        den = lcm(den, c.get_den());
    std::vector<Integer> A;
    for (auto const& c : v.coeffs())
        A.push_back(Rational(c * den).get_num());
    IntPolynomial Ai(std::move(A));
    Integer res = resultant(K.generator(), Ai);
    return Rational(res) / (Rational(ipow(den, e)) * Rational(ipow(K.generator().leading(), Ai.degree())));
}

RatPolynomial charpoly(FieldElement const& a)
{
    NumberField const& K = a.field();
    int e = K.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= e; ++i) {
        xs.emplace_back(i);
        ys.push_back(norm(K.element(Rational(i)) - a));
    }
    return interpolate(xs, ys);
}

Rational trace(FieldElement const& a)
{
    int e = a.field().degree();
    return -charpoly(a).coeff(e - 1);
}

IntPolynomial minpoly(FieldElement const& a)
{
    return canonical(squarefree_part(clear_denominators(charpoly(a))));
}

CInterval embed(FieldElement const& a, CInterval const& theta)
{
    mpfr_prec_t p = theta.re.prec();
    CInterval r(p);
    RatPolynomial const& v = a.rep();
    for (int i = v.degree(); i >= 0; --i)
        r = r * theta + CInterval(Interval(v[i], p), Interval(p));
    return r;
}

// ------------------------------------------------------------------ KPoly

void KPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

KPoly::KPoly(NumberField K, std::vector<FieldElement> c) : K_(std::move(K)), c_(std::move(c)) { trim(); }

KPoly::KPoly(NumberField K, IntPolynomial const& f) : K_(std::move(K))
{
    for (auto const& a : f.coeffs())
        c_.push_back(K_.element(Rational(a)));
}

KPoly::KPoly(NumberField K, RatPolynomial const& f) : K_(std::move(K))
{
    for (auto const& a : f.coeffs())
        c_.push_back(K_.element(a));
}

FieldElement KPoly::coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : K_.zero(); }

bool KPoly::is_monic() const { return !c_.empty() && c_.back() == K_.one(); }

bool KPoly::has_rational_coeffs() const
{
    return std::all_of(c_.begin(), c_.end(), [](FieldElement const& a) { return a.is_rational(); });
}

RatPolynomial KPoly::to_rational() const
{
    std::vector<Rational> r;
    for (auto const& a : c_) {
        if (!a.is_rational())
            throw std::logic_error("coefficient outside Q");
        r.push_back(a.rational_value());
    }
    return RatPolynomial(std::move(r));
}

KPoly operator+(KPoly const& a, KPoly const& b)
{
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.K_.zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return KPoly(a.K_, std::move(c));
}

KPoly KPoly::operator-() const
{
    std::vector<FieldElement> c;
    for (auto const& a : c_)
        c.push_back(-a);
    return KPoly(K_, std::move(c));
}

KPoly operator-(KPoly const& a, KPoly const& b) { return a + (-b); }

KPoly operator*(KPoly const& a, KPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return KPoly(a.K_);
    std::vector<RatPolynomial> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i].rep() * b.c_[j].rep();
    std::vector<FieldElement> r;
    for (auto& v : c)
        r.push_back(a.K_.element(v));
    return KPoly(a.K_, std::move(r));
}

KPoly operator*(FieldElement const& s, KPoly const& a)
{
    std::vector<FieldElement> c;
    for (auto const& v : a.c_)
        c.push_back(s * v);
    return KPoly(a.K_, std::move(c));
}

KPoly KPoly::derivative() const
{
    std::vector<FieldElement> c;
    for (int i = 1; i <= degree(); ++i)
        c.push_back(Rational(i) * c_[i]);
    return KPoly(K_, std::move(c));
}

FieldElement KPoly::evaluate(FieldElement const& x) const
{
    FieldElement r = K_.zero();
    for (int i = degree(); i >= 0; --i)
        r = r * x + c_[i];
    return r;
}

KPoly KPoly::taylor_shift(FieldElement const& a) const
{
    std::vector<FieldElement> c(c_);
    int n = (int)c.size();
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j)
            c[j] += a * c[j + 1];
    return KPoly(K_, std::move(c));
}

std::pair<KPoly, KPoly> divmod(KPoly const& a, KPoly const& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    NumberField const& K = a.field();
    int db = b.degree();
    if (a.degree() < db)
        return {KPoly(K), a};
    FieldElement inv = b.leading().inverse();
    std::vector<FieldElement> r(a.coeffs()), q(a.degree() - db + 1, K.zero());
    for (int i = a.degree() - db; i >= 0; --i) {
        FieldElement t = r[i + db] * inv;
        q[i] = t;
        if (t.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= t * b[j];
    }
    r.resize(db);
    return {KPoly(K, std::move(q)), KPoly(K, std::move(r))};
}

KPoly monic(KPoly const& f)
{
    if (f.is_zero())
        return f;
    return f.leading().inverse() * f;
}

KPoly gcd(KPoly const& a, KPoly const& b)
{
    KPoly x = a, y = b;
    while (!y.is_zero()) {
        KPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

FieldElement map_element(FieldElement const& a, FieldElement const& image)
{
    NumberField const& L = image.field();
    FieldElement r = L.zero();
    RatPolynomial const& v = a.rep();
    for (int i = v.degree(); i >= 0; --i)
        r = r * image + L.element(v[i]);
    return r;
}

KPoly map_coefficients(KPoly const& f, FieldElement const& image)
{
    std::vector<FieldElement> c;
    for (auto const& a : f.coeffs())
        c.push_back(map_element(a, image));
    return KPoly(image.field(), std::move(c));
}

RatPolynomial norm(KPoly const& f)
{
    NumberField const& K = f.field();
    int e = K.degree(), n = f.degree();
    if (f.is_zero())
        return {};
    if (e == 1)
        return f.to_rational();
    if (e == 2) {
        // f = A + theta B, N = A^2 + (theta + theta') A B + theta theta' B^2
        IntPolynomial const& g = K.generator();
        Rational tr = Rational(-g[1]) / g[2], nm = Rational(g[0]) / g[2];
        std::vector<Rational> a, b;
        for (auto const& c : f.coeffs()) {
            a.push_back(c.coord(0));
            b.push_back(c.coord(1));
        }
        RatPolynomial A(std::move(a)), B(std::move(b));
        return A * A + tr * (A * B) + nm * (B * B);
    }
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= e * n; ++i) {
        xs.emplace_back(i);
        ys.push_back(norm(f.evaluate(K.element(Rational(i)))));
    }
    return interpolate(xs, ys);
}

std::string to_string(FieldElement const& a)
{
    RatPolynomial const& v = a.rep();
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = v.degree(); i >= 0; --i) {
        if (v[i] == 0)
            continue;
        Rational c = v[i];
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        Rational ac = abs(c);
        if (i == 0 || ac != 1)
            os << hc::to_string(ac);
        if (i >= 1)
            os << (i == 0 || ac != 1 ? "*" : "") << "t";
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

std::string to_string(KPoly const& f)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= f.degree(); ++i)
        os << (i ? ", " : "") << to_string(f[i]);
    os << "]";
    return os.str();
}

// ----------------------------------------------------------- factoring

namespace {

bool kpoly_less(KPoly const& a, KPoly const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        RatPolynomial const &x = a[i].rep(), &y = b[i].rep();
        if (x == y)
            continue;
        int e = std::max(x.degree(), y.degree());
        for (int j = e; j >= 0; --j)
            if (x.coeff(j) != y.coeff(j))
                return x.coeff(j) < y.coeff(j);
    }
    return false;
}

bool rat_squarefree(RatPolynomial const& f)
{
    return gcd(f, f.derivative()).degree() == 0;
}

} // namespace

std::vector<KPoly> factor_squarefree_over_field(KPoly const& f0, int cap)
{
    NumberField const& K = f0.field();
    int e = K.degree();
    KPoly f = monic(f0);
    int n = f.degree();
    if (n <= 0)
        return {};
    if (n * e > cap)
        throw CapExceeded("factorization over a number field limited to deg f * [K:Q] <= " + std::to_string(cap));
    if (n == 1)
        return {f};
    std::vector<KPoly> out;
    if (e == 1) {
        IntPolynomial p = clear_denominators(f.to_rational());
        if (p.leading() < 0)
            p = -p;
        for (auto const& h : factor_squarefree(p, cap))
            out.push_back(monic(KPoly(K, h)));
        std::sort(out.begin(), out.end(), kpoly_less);
        return out;
    }
    FieldElement th = K.theta();
    for (long k = 0;; k = (k > 0 ? -k : 1 - k)) {
        FieldElement shift = Rational(k) * th;
        KPoly fk = f.taylor_shift(-shift);
        RatPolynomial N = norm(fk);
        if (!rat_squarefree(N))
            continue;
        IntPolynomial Ni = clear_denominators(N);
        if (Ni.leading() < 0)
            Ni = -Ni;
        std::vector<IntPolynomial> parts = factor_squarefree(Ni, std::max(cap, kFactorDegreeCap) + 8);
        if (parts.size() == 1)
            return {f};
        for (auto const& p : parts) {
            KPoly h = gcd(fk, KPoly(K, p));
            out.push_back(monic(h.taylor_shift(shift)));
        }
        break;
    }
    std::sort(out.begin(), out.end(), kpoly_less);
    return out;
}

std::vector<std::pair<KPoly, int>> factor_over_field(KPoly const& f)
{
    if (f.is_zero())
        throw InvalidInput("cannot factor the zero polynomial");
    NumberField const& K = f.field();
    if (f.degree() * K.degree() > kFieldFactorCap)
        throw CapExceeded("factorization over a number field limited to deg f * [K:Q] <= 24");
    std::vector<std::pair<KPoly, int>> out;
    // Yun's algorithm in K[x]
    KPoly a = monic(f), d = a.derivative();
    if (a.degree() < 1)
        return out;
    KPoly g = gcd(a, d);
    KPoly b = divmod(a, g).first, c = divmod(d, g).first;
    KPoly dd = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        KPoly h = gcd(b, dd);
        for (auto& p : factor_squarefree_over_field(h, kFieldFactorCap))
            out.emplace_back(std::move(p), i);
        b = divmod(b, h).first;
        c = divmod(dd, h).first;
        dd = c - b.derivative();
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        if (x.second != y.second)
            return x.second < y.second;
        return kpoly_less(x.first, y.first);
    });
    return out;
}

std::vector<std::pair<KPoly, int>> factor_over_field(IntPolynomial const& f, NumberField const& K)
{
    if (f.is_zero())
        throw InvalidInput("cannot factor the zero polynomial");
    if (f.degree() * K.degree() > kFieldFactorCap)
        throw CapExceeded("factorization over a number field limited to deg f * [K:Q] <= 24");
    std::vector<std::pair<KPoly, int>> out;
    for (auto const& [s, m] : squarefree_decomposition(f))
        for (auto& p : factor_squarefree_over_field(KPoly(K, s), kFieldFactorCap))
            out.emplace_back(std::move(p), m);
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        if (x.second != y.second)
            return x.second < y.second;
        return kpoly_less(x.first, y.first);
    });
    return out;
}

bool is_irreducible_over(KPoly const& f)
{
    if (f.degree() < 1)
        return false;
    if (f.degree() == 1)
        return true;
    if (gcd(f, f.derivative()).degree() > 0)
        return false;
    return factor_squarefree_over_field(f, kFieldFactorCap).size() == 1;
}

bool field_equals(NumberField const& K1, NumberField const& K2)
{
    if (K1.degree() != K2.degree())
        return false;
    if (K1 == K2 || K1.degree() == 1)
        return true;
    if (K1.degree() == 2)
        return fundamental_discriminant(poly_discriminant(K1.generator())) ==
               fundamental_discriminant(poly_discriminant(K2.generator()));
    for (auto const& [h, m] : factor_over_field(K1.generator(), K2))
        if (h.degree() == 1)
            return true;
    return false;
}

RelativeDegree relative_degree(IntPolynomial const& D, NumberField const& K, int root_index)
{
    if (D.degree() < 1 || !is_canonical(D))
        throw InvalidInput("relative_degree needs a canonical polynomial");
    if (root_index < 0 || root_index >= D.degree())
        throw InvalidInput("root index out of range");
    RelativeDegree out;
    auto fz = factor_over_field(D, K);
    std::vector<KPoly> facs;
    for (auto const& [h, m] : fz) {
        if (m != 1)
            throw InvalidInput("relative_degree needs a squarefree polynomial");
        out.degrees.push_back(h.degree());
        facs.push_back(h);
    }
    std::sort(out.degrees.begin(), out.degrees.end());
    if (out.degrees.front() == out.degrees.back()) {
        out.root_degree = out.degrees.front();
        return out;
    }
    // locate the factor vanishing at the chosen root under the first embedding of K
    for (long bits = 40; bits <= precision_cap(); bits *= 2) {
        Rational rad(1, Integer(1) << bits);
        CInterval th = K.embeddings(rad)[0].box();
        CInterval beta = root_disks(D, BigFloat(rad, 64, MPFR_RNDD))[root_index].box();
        int hits = 0, deg = 0;
        for (auto const& h : facs) {
            CInterval v(th.re.prec());
            for (int i = h.degree(); i >= 0; --i)
                v = v * beta + embed(h[i], th);
            if (v.re.contains_zero() && v.im.contains_zero()) {
                ++hits;
                deg = h.degree();
            }
        }
        if (hits == 1) {
            out.root_degree = deg;
            return out;
        }
    }
    throw PrecisionExhausted("could not attribute the root to a factor");
}

// ------------------------------------------------------- splitting fields

namespace {

/* Res_y(g(y), g(x - k y)) as a polynomial in x */
RatPolynomial sum_resultant(IntPolynomial const& g, long k)
{
    int e = g.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= e * e; ++i) {
        IntPolynomial lin{(long)i, -k};
        xs.emplace_back(i);
        ys.emplace_back(resultant(g, g.compose(lin)));
    }
    return interpolate(xs, ys);
}

} // namespace

SplittingField splitting_field(NumberField const& K)
{
    int e = K.degree();
    SplittingField S;
    if (e == 1) {
        S.L = K;
        S.theta_images = {K.theta()};
        return S;
    }
    IntPolynomial const& g = K.generator();
    if (e == 2) {
        S.L = K;
        FieldElement th = K.theta();
        S.theta_images = {th, K.element(Rational(-g[1]) / g[2]) - th};
        return S;
    }
    if (e != 3)
        throw CapExceeded("splitting fields are limited to generators of degree <= 3");
    auto fz = factor_over_field(g, K);
    if (fz.size() == 3) {
        S.L = K;
        S.theta_images.push_back(K.theta());
        for (auto const& [h, m] : fz) {
            FieldElement r = -h[0];
            if (r != K.theta())
                S.theta_images.push_back(r);
        }
        return S;
    }
    // non-Galois cubic: L = Q(theta_i + k theta_j), degree 6
    for (long k : {1L, 2L, 3L, -2L, -3L, 4L, 5L, -4L, -5L}) {
        RatPolynomial R = sum_resultant(g, k);
        std::vector<Rational> dc;
        RatPolynomial gm = K.monic_generator();
        Rational p = 1;
        for (int i = e; i >= 0; --i) {
            dc.insert(dc.begin(), gm[i] * p);
            p *= (k + 1);
        }
        RatPolynomial diag(std::move(dc));
        auto [q, r] = divmod(R, diag);
        if (!r.is_zero())
            continue;
        IntPolynomial H = canonical(clear_denominators(q));
        if (H.degree() != 6 || !is_squarefree(H) || !is_irreducible(H))
            continue;
        S.L = make_field(H);
        for (auto const& h : factor_squarefree_over_field(KPoly(S.L, g), kFieldFactorCap))
            if (h.degree() == 1)
                S.theta_images.push_back(-h[0]);
        if (S.theta_images.size() != 3)
            throw std::logic_error("splitting field construction failed");
        return S;
    }
    throw std::logic_error("no primitive element found for the splitting field");
}

Conjugates conjugate_polys(KPoly const& f)
{
    Conjugates C;
    C.split = splitting_field(f.field());
    for (auto const& im : C.split.theta_images)
        C.polys.push_back(map_coefficients(f, im));
    C.pairwise_coprime = true;
    for (size_t i = 0; i < C.polys.size(); ++i)
        for (size_t j = i + 1; j < C.polys.size(); ++j)
            if (gcd(C.polys[i], C.polys[j]).degree() > 0)
                C.pairwise_coprime = false;
    return C;
}

} // namespace hc
