#include "heightcensus/enumerate.hpp"
#include "heightcensus/errors.hpp"
#include "heightcensus/factor.hpp"
#include "heightcensus/mahler.hpp"
#include "heightcensus/roots.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace hc {

std::vector<Integer> coefficient_limits(int d, Rational const& B)
{
    std::vector<Integer> lim(d + 1);
    for (int i = 0; i <= d; ++i)
        lim[i] = floor_q(Rational(binomial(d, i)) * B);
    lim[d] = floor_q(B);
    return lim;
}

double box_estimate(int d, Rational const& B)
{
    auto lim = coefficient_limits(d, B);
    double n = lim[d].get_d();
    for (int i = 0; i < d; ++i)
        n *= 2 * lim[i].get_d() + 1;
    return n;
}

namespace {

using i128 = __int128;

struct Bound {
    Rational B;
    double Bd;
    bool small = false; // num and den below 2^20
    i128 num = 0, den = 0;
    std::vector<i128> binom;

    Bound(int d, Rational const& b) : B(b), Bd(b.get_d())
    {
        if (mpz_sizeinbase(b.get_num().get_mpz_t(), 2) <= 20 && mpz_sizeinbase(b.get_den().get_mpz_t(), 2) <= 20) {
            small = true;
            num = b.get_num().get_si();
            den = b.get_den().get_si();
        }
        for (int i = 0; i <= d; ++i)
            binom.push_back(binomial(d, i).get_si());
    }
};

/* coefficients of G with G(x^2) = +-f(x) f(-x) */
void graeffe(std::vector<i128> const& a, std::vector<i128>& g)
{
    int d = (int)a.size() - 1;
    g.assign(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            if ((i + j) % 2 == 0) {
                i128 t = a[i] * a[j];
                g[(i + j) / 2] += (j % 2) ? -t : t;
            }
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

/* -1: M > B certainly, +1: M <= B certainly, 0: undecided */
int cheap_mahler_test(std::vector<long> const& c, Bound const& bd)
{
    int d = (int)c.size() - 1;
    if (!bd.small)
        return 0;
    i128 s = 0;
    for (long v : c)
        s += (i128)v * v;
    if (s * bd.den * bd.den <= bd.num * bd.num)
        return 1; // M <= ||f||_2
    std::vector<i128> a(c.begin(), c.end()), g, h;
    graeffe(a, g);
    i128 n2 = bd.num * bd.num, d2 = bd.den * bd.den;
    for (int i = 0; i <= d; ++i)
        if (iabs(g[i]) * d2 > bd.binom[i] * n2)
            return -1;
    i128 mx = 0;
    for (auto v : g)
        mx = std::max(mx, iabs(v));
    if (mx < ((i128)1 << 40) && n2 < ((i128)1 << 40) && d2 < ((i128)1 << 40)) {
        graeffe(g, h);
        i128 n4 = n2 * n2, d4 = d2 * d2;
        for (int i = 0; i <= d; ++i)
            if (iabs(h[i]) * d4 > bd.binom[i] * n4)
                return -1;
    }
    return 0;
}

bool decide_mahler(std::vector<long> const& c, Bound const& bd, long long* exact_checks)
{
    int q = cheap_mahler_test(c, bd);
    if (q != 0)
        return q > 0;
    std::vector<double> dc(c.begin(), c.end());
    double lo, hi;
    if (fast_mahler_bounds(dc, lo, hi)) {
        if (lo > bd.Bd * (1 + 1e-12))
            return false;
        if (hi < bd.Bd * (1 - 1e-12))
            return true;
    }
    ++*exact_checks;
    std::vector<Integer> z(c.begin(), c.end());
    return compare_mahler(IntPolynomial(std::move(z)), bd.B) != Cmp::GT;
}

bool irreducible_small(IntPolynomial const& D)
{
    if (D.degree() <= 1)
        return true;
    // rational roots +-1 are the cheapest certificates of reducibility
    Integer s1 = 0, s2 = 0;
    for (int i = 0; i <= D.degree(); ++i) {
        s1 += D[i];
        s2 += (i % 2) ? Integer(-D[i]) : D[i];
    }
    if (s1 == 0 || s2 == 0)
        return false;
    if (irreducible_by_degree_sets(D, 4))
        return true;
    return is_irreducible(D);
}

} // namespace

bool mahler_at_most(IntPolynomial const& D, Rational const& B)
{
    bool fits = true;
    for (auto const& v : D.coeffs())
        if (!v.fits_slong_p() || abs(v) > (1L << 30))
            fits = false;
    if (!fits)
        return compare_mahler(D, B) != Cmp::GT;
    std::vector<long> c;
    for (auto const& v : D.coeffs())
        c.push_back(v.get_si());
    Bound bd(D.degree(), B);
    long long dummy = 0;
    return decide_mahler(c, bd, &dummy);
}

EnumStats enumerate_polynomials(int d, Rational const& B, EnumConfig const& cfg,
                                std::function<void(int, IntPolynomial const&)> const& visit)
{
    if (d < 1)
        throw InvalidInput("degree must be >= 1");
    if (B < 1)
        throw InvalidInput("Mahler bound must be >= 1");
    EnumStats st;
    st.box_size = box_estimate(d, B);
    if (st.box_size > cfg.candidate_cap)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", st.box_size);
        throw BoxRefused(std::string("candidate box of about ") + buf + " polynomials exceeds the cap", st.box_size);
    }
    auto limI = coefficient_limits(d, B);
    std::vector<long> lim;
    for (auto const& v : limI) {
        if (!v.fits_slong_p() || v > (1L << 30))
            throw CapExceeded("coefficient bound too large for the enumerator");
        lim.push_back(v.get_si());
    }
    if (d == 1) {
        // a1 x + a0 with gcd 1 and max(|a0|, a1) <= B; x itself is the number 0
        long L = lim[1];
        for (long a1 = 1; a1 <= L; ++a1)
            for (long a0 = -L; a0 <= L; ++a0) {
                if (std::gcd(a1, std::labs(a0)) != 1)
                    continue;
                ++st.candidates;
                ++st.accepted;
                visit(0, IntPolynomial(std::vector<Integer>{a0, a1}));
            }
        return st;
    }
    Bound bd(d, B);
    long width = 2 * lim[d - 1] + 1;
    long slices = lim[d] * width;
    int W = std::max(1, cfg.workers);
    std::atomic<long> next{0};
    std::vector<EnumStats> ws(W);
    bool zero_ok = !cfg.irreducible_only && !cfg.nonzero_constant;
    auto work = [&](int w) {
        std::vector<long> c(d + 1), shifted;
        EnumStats& s = ws[w];
        for (long sl; (sl = next.fetch_add(1)) < slices;) {
            c[d] = 1 + sl / width;
            c[d - 1] = sl % width - lim[d - 1];
            // odometer over c[d-2] .. c[0]
            for (int i = 0; i <= d - 2; ++i)
                c[i] = -lim[i];
            while (true) {
                if (c[0] != 0 || zero_ok) {
                    long g = 0;
                    for (long v : c)
                        g = std::gcd(g, std::labs(v));
                    if (g == 1) {
                        ++s.candidates;
                        // M(x^v h) = M(h)
                        auto first = std::find_if(c.begin(), c.end(), [](long v) { return v != 0; });
                        shifted.assign(first, c.end());
                        if (decide_mahler(shifted.size() == c.size() ? c : shifted, bd, &s.exact_checks)) {
                            IntPolynomial D(std::vector<Integer>(c.begin(), c.end()));
                            if (!cfg.irreducible_only || irreducible_small(D)) {
                                ++s.accepted;
                                visit(w, D);
                            }
                        }
                    }
                }
                int i = 0;
                while (i <= d - 2 && c[i] == lim[i]) {
                    c[i] = -lim[i];
                    ++i;
                }
                if (i > d - 2)
                    break;
                ++c[i];
            }
        }
    };
    if (W == 1)
        work(0);
    else {
        std::vector<std::thread> th;
        for (int w = 0; w < W; ++w)
            th.emplace_back(work, w);
        for (auto& t : th)
            t.join();
    }
    for (auto const& s : ws) {
        st.candidates += s.candidates;
        st.exact_checks += s.exact_checks;
        st.accepted += s.accepted;
    }
    return st;
}

} // namespace hc
