#include "heightcensus/interval.hpp"
#include "heightcensus/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace hc {

namespace {
std::atomic<int> g_precision_cap{4096};
}

int precision_cap() { return g_precision_cap.load(); }

void set_precision_cap(int bits)
{
    if (bits < 64)
        throw InvalidInput("precision cap must be at least 64 bits");
    g_precision_cap.store(bits);
}

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double d, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(Integer const& z, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
}

BigFloat::BigFloat(Rational const& q, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

BigFloat::BigFloat(BigFloat const& o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat const& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Rational BigFloat::to_rational() const
{
    if (!mpfr_number_p(v_))
        throw PrecisionExhausted("non-finite value in exact conversion");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

namespace {
mpfr_prec_t pmax(BigFloat const& a, BigFloat const& b) { return std::max(a.prec(), b.prec()); }
} // namespace

BigFloat operator+(BigFloat const& a, BigFloat const& b)
{
    BigFloat r(pmax(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(BigFloat const& a, BigFloat const& b)
{
    BigFloat r(pmax(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(BigFloat const& a, BigFloat const& b)
{
    BigFloat r(pmax(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator/(BigFloat const& a, BigFloat const& b)
{
    BigFloat r(pmax(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat abs(BigFloat const& a)
{
    BigFloat r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(BigFloat const& a)
{
    BigFloat r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long v, mpfr_prec_t prec) : lo_(prec), hi_(prec)
{
    mpfr_set_si(lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(hi_.get(), v, MPFR_RNDU);
}

Interval::Interval(Integer const& z, mpfr_prec_t prec) : lo_(z, prec, MPFR_RNDD), hi_(z, prec, MPFR_RNDU) {}

Interval::Interval(Rational const& q, mpfr_prec_t prec) : lo_(q, prec, MPFR_RNDD), hi_(q, prec, MPFR_RNDU) {}

Interval::Interval(Rational const& lo, Rational const& hi, mpfr_prec_t prec)
    : lo_(lo, prec, MPFR_RNDD), hi_(hi, prec, MPFR_RNDU)
{
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::pi(mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::hull(Interval const& a, Interval const& b)
{
    return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

double Interval::mid_double() const { return 0.5 * (lo_.to_double() + hi_.to_double()); }

bool Interval::contains(Rational const& q) const
{
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::certainly_less(Rational const& q) const { return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0; }

bool Interval::certainly_greater(Rational const& q) const { return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0; }

BigFloat Interval::width() const
{
    BigFloat w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

double Interval::relative_width() const
{
    if (contains_zero())
        return std::numeric_limits<double>::infinity();
    BigFloat w = width(), m(prec());
    if (lo_.sign() > 0)
        mpfr_set(m.get(), lo_.get(), MPFR_RNDN);
    else
        mpfr_neg(m.get(), hi_.get(), MPFR_RNDN);
    BigFloat r(prec());
    mpfr_div(r.get(), w.get(), m.get(), MPFR_RNDU);
    return mpfr_get_d(r.get(), MPFR_RNDU);
}

namespace {
mpfr_prec_t imax(Interval const& a, Interval const& b) { return std::max(a.prec(), b.prec()); }
} // namespace

Interval operator+(Interval const& a, Interval const& b)
{
    Interval r(imax(a, b));
    BigFloat lo(r.prec()), hi(r.prec());
    mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(Interval const& a, Interval const& b)
{
    mpfr_prec_t p = imax(a, b);
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const
{
    BigFloat lo(prec()), hi(prec());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(Interval const& a, Interval const& b)
{
    mpfr_prec_t p = imax(a, b);
    BigFloat lo(p), hi(p), t(p);
    mpfr_srcptr al = a.lo().get(), ah = a.hi().get(), bl = b.lo().get(), bh = b.hi().get();
    if (mpfr_sgn(al) >= 0 && mpfr_sgn(bl) >= 0) {
        mpfr_mul(lo.get(), al, bl, MPFR_RNDD);
        mpfr_mul(hi.get(), ah, bh, MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
    }
    mpfr_srcptr xs[2] = {al, ah}, ys[2] = {bl, bh};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get()))
                mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get()))
                mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(Interval const& a, Interval const& b)
{
    if (b.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    mpfr_prec_t p = imax(a, b);
    BigFloat lo(p), hi(p), t(p);
    mpfr_srcptr xs[2] = {a.lo().get(), a.hi().get()}, ys[2] = {b.lo().get(), b.hi().get()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get()))
                mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get()))
                mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval sqr(Interval const& a)
{
    mpfr_prec_t p = a.prec();
    BigFloat lo(p), hi(p);
    if (a.lo().sign() >= 0) {
        mpfr_sqr(lo.get(), a.lo().get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), a.hi().get(), MPFR_RNDU);
    } else if (a.hi().sign() <= 0) {
        mpfr_sqr(lo.get(), a.hi().get(), MPFR_RNDD);
        mpfr_sqr(hi.get(), a.lo().get(), MPFR_RNDU);
    } else {
        BigFloat t(p);
        mpfr_sqr(hi.get(), a.hi().get(), MPFR_RNDU);
        mpfr_sqr(t.get(), a.lo().get(), MPFR_RNDU);
        if (t > hi)
            hi = t;
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(Interval const& a)
{
    if (a.lo().sign() < 0)
        throw std::domain_error("sqrt of an interval with negative part");
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval abs(Interval const& a)
{
    if (a.lo().sign() >= 0)
        return a;
    if (a.hi().sign() <= 0)
        return -a;
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
    if (a.hi() > hi)
        hi = a.hi();
    return Interval(std::move(lo), std::move(hi));
}

Interval log(Interval const& a)
{
    if (a.lo().sign() <= 0)
        throw std::domain_error("log of an interval reaching zero");
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_log(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_log(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval exp(Interval const& a)
{
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_exp(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), a.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sin_first_quadrant(Interval const& a)
{
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_sin(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_sin(hi.get(), a.hi().get(), MPFR_RNDU);
    if (mpfr_cmp_ui(hi.get(), 1) > 0)
        mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval max(Interval const& a, Interval const& b)
{
    return Interval(a.lo() < b.lo() ? b.lo() : a.lo(), a.hi() < b.hi() ? b.hi() : a.hi());
}

Interval pow(Interval const& a, long k)
{
    if (k < 0)
        return Interval(1L, a.prec()) / pow(a, -k);
    Interval r(1L, a.prec()), b = a;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = sqr(b);
    }
    return r;
}

Interval root(Interval const& a, unsigned long k)
{
    if (a.lo().sign() < 0)
        throw std::domain_error("root of an interval with negative part");
    BigFloat lo(a.prec()), hi(a.prec());
    mpfr_rootn_ui(lo.get(), a.lo().get(), k, MPFR_RNDD);
    mpfr_rootn_ui(hi.get(), a.hi().get(), k, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval pow(Interval const& a, Rational const& e)
{
    if (e.get_den() > std::numeric_limits<unsigned long>::max() / 2 || abs(e.get_num()) > 1000000)
        return exp(Interval(e, a.prec()) * log(a));
    long p = e.get_num().get_si();
    unsigned long q = e.get_den().get_ui();
    return root(pow(a, p), q);
}

Interval abs(CInterval const& z) { return sqrt(sqr(z.re) + sqr(z.im)); }

} // namespace hc
