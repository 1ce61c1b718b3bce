#ifndef HEIGHTCENSUS_CERTIFIED_HPP
#define HEIGHTCENSUS_CERTIFIED_HPP

#include "heightcensus/integer.hpp"
#include "heightcensus/interval.hpp"

#include <string>

namespace hc {

/* Rational enclosure [lo, hi] of a real quantity. */
struct CertifiedReal {
    Rational lo, hi;

    CertifiedReal() = default;
    CertifiedReal(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit CertifiedReal(Rational exact) : lo(exact), hi(exact) {}
    static CertifiedReal from(Interval const& iv) { return {iv.lower(), iv.upper()}; }

    bool contains(Rational const& q) const { return lo <= q && q <= hi; }
    bool intersects(CertifiedReal const& o) const { return !(hi < o.lo || o.hi < lo); }
    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    double mid_double() const { return mid().get_d(); }
    Interval to_interval(mpfr_prec_t prec) const { return Interval(lo, hi, prec); }
};

/* Decimal rendering: lo rounded down, hi rounded up, `digits` significant digits. */
std::string decimal_lower(Rational const& q, int digits);
std::string decimal_upper(Rational const& q, int digits);
std::string decimal_nearest(Rational const& q, int digits);
std::string to_decimal_pair(CertifiedReal const& c, int digits);

} // namespace hc

#endif
