#ifndef HEIGHTCENSUS_INTERVAL_HPP
#define HEIGHTCENSUS_INTERVAL_HPP

#include "heightcensus/integer.hpp"

#include <mpfr.h>

#include <utility>

namespace hc {

int precision_cap();
void set_precision_cap(int bits);

/* RAII mpfr_t. Arithmetic operators round to nearest at the larger operand
 * precision; directed operations live in Interval. */
class BigFloat {
    mpfr_t v_;

public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(double d, mpfr_prec_t prec);
    BigFloat(Integer const& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(Rational const& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(BigFloat const& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat const& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    void set_prec_round(mpfr_prec_t p) { mpfr_prec_round(v_, p, MPFR_RNDN); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Rational to_rational() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator-(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator*(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator/(BigFloat const& a, BigFloat const& b);
    BigFloat operator-() const;
    friend bool operator<(BigFloat const& a, BigFloat const& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(BigFloat const& a, BigFloat const& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(BigFloat const& a, BigFloat const& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(BigFloat const& a, BigFloat const& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
};

BigFloat abs(BigFloat const& a);
BigFloat sqrt(BigFloat const& a);

/* Closed interval [lo, hi] with outward rounding. */
class Interval {
    BigFloat lo_, hi_;

public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(long v, mpfr_prec_t prec);
    Interval(Integer const& z, mpfr_prec_t prec);
    Interval(Rational const& q, mpfr_prec_t prec);
    Interval(Rational const& lo, Rational const& hi, mpfr_prec_t prec);
    Interval(BigFloat lo, BigFloat hi);

    static Interval pi(mpfr_prec_t prec);
    static Interval hull(Interval const& a, Interval const& b);

    BigFloat const& lo() const { return lo_; }
    BigFloat const& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }
    Rational lower() const { return lo_.to_rational(); }
    Rational upper() const { return hi_.to_rational(); }
    double mid_double() const;

    bool contains(Rational const& q) const;
    bool contains_zero() const;
    bool certainly_less(Rational const& q) const;
    bool certainly_greater(Rational const& q) const;
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }
    bool disjoint(Interval const& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }
    BigFloat width() const;
    /* upper bound on (hi - lo) / min(|lo|, |hi|), infinity if 0 is inside */
    double relative_width() const;

    friend Interval operator+(Interval const& a, Interval const& b);
    friend Interval operator-(Interval const& a, Interval const& b);
    friend Interval operator*(Interval const& a, Interval const& b);
    friend Interval operator/(Interval const& a, Interval const& b);
    Interval operator-() const;
    Interval& operator+=(Interval const& b) { return *this = *this + b; }
    Interval& operator*=(Interval const& b) { return *this = *this * b; }
};

Interval sqr(Interval const& a);
Interval sqrt(Interval const& a);
Interval abs(Interval const& a);
Interval log(Interval const& a);
Interval exp(Interval const& a);
/* sin on an interval inside [0, pi/2] */
Interval sin_first_quadrant(Interval const& a);
Interval max(Interval const& a, Interval const& b);
Interval pow(Interval const& a, long k);
/* a^(1/k) for a >= 0 */
Interval root(Interval const& a, unsigned long k);
/* a^(p/q) for a > 0 */
Interval pow(Interval const& a, Rational const& e);

/* Rectangular complex interval. */
struct CInterval {
    Interval re, im;

    explicit CInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    friend CInterval operator+(CInterval const& a, CInterval const& b) { return {a.re + b.re, a.im + b.im}; }
    friend CInterval operator-(CInterval const& a, CInterval const& b) { return {a.re - b.re, a.im - b.im}; }
    friend CInterval operator*(CInterval const& a, CInterval const& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CInterval operator*(Interval const& s, CInterval const& b) { return {s * b.re, s * b.im}; }
    friend CInterval operator/(CInterval const& a, CInterval const& b)
    {
        Interval d = sqr(b.re) + sqr(b.im);
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    CInterval conj() const { return {re, -im}; }
};

Interval abs(CInterval const& z);

} // namespace hc

#endif
