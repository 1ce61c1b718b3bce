#include "heightcensus/certified.hpp"

namespace hc {

namespace {

/* q rounded to `digits` significant decimal digits, direction -1 down, +1 up, 0 nearest */
std::string render(Rational const& q, int digits, int dir)
{
    if (q == 0)
        return "0";
    bool neg = q < 0;
    Rational a = abs(q);
    // exponent e with 10^e <= a < 10^(e+1)
    long e = (long)mpz_sizeinbase(a.get_num_mpz_t(), 10) - (long)mpz_sizeinbase(a.get_den_mpz_t(), 10);
    auto p10 = [](long k) { return k >= 0 ? Rational(ipow(Integer(10), k)) : Rational(1, ipow(Integer(10), -k)); };
    while (a >= p10(e + 1))
        ++e;
    while (a < p10(e))
        --e;
    long shift = digits - 1 - e;
    Rational scaled = a * p10(shift);
    // rounding direction relative to |q|
    int d = neg ? -dir : dir;
    Integer m;
    if (d < 0)
        m = floor_q(scaled);
    else if (d > 0)
        m = ceil_q(scaled);
    else
        m = floor_q(scaled + Rational(1, 2));
    std::string s = m.get_str();
    // insert the decimal point
    long point = (long)s.size() - shift;
    std::string out;
    if (point <= 0)
        out = "0." + std::string(-point, '0') + s;
    else if (point >= (long)s.size())
        out = s + std::string(point - s.size(), '0');
    else
        out = s.substr(0, point) + "." + s.substr(point);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
    }
    return neg ? "-" + out : out;
}

} // namespace

std::string decimal_lower(Rational const& q, int digits) { return render(q, digits, -1); }
std::string decimal_upper(Rational const& q, int digits) { return render(q, digits, +1); }
std::string decimal_nearest(Rational const& q, int digits) { return render(q, digits, 0); }

std::string to_decimal_pair(CertifiedReal const& c, int digits)
{
    return "[" + decimal_lower(c.lo, digits) + ", " + decimal_upper(c.hi, digits) + "]";
}

} // namespace hc
