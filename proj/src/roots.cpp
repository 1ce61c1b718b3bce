#include "heightcensus/roots.hpp"
#include "heightcensus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hc {

CInterval RootDisk::box() const
{
    mpfr_prec_t p = re.prec();
    BigFloat rl(p), rh(p), il(p), ih(p);
    mpfr_sub(rl.get(), re.get(), rad.get(), MPFR_RNDD);
    mpfr_add(rh.get(), re.get(), rad.get(), MPFR_RNDU);
    mpfr_sub(il.get(), im.get(), rad.get(), MPFR_RNDD);
    mpfr_add(ih.get(), im.get(), rad.get(), MPFR_RNDU);
    return CInterval(Interval(std::move(rl), std::move(rh)), Interval(std::move(il), std::move(ih)));
}

Interval RootDisk::modulus() const
{
    mpfr_prec_t p = re.prec();
    Interval c = abs(CInterval(Interval(re, re), Interval(im, im)));
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.get(), c.lo().get(), rad.get(), MPFR_RNDD);
    if (lo.sign() < 0)
        mpfr_set_zero(lo.get(), 1);
    mpfr_add(hi.get(), c.hi().get(), rad.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// ------------------------------------------------------------ double Aberth

std::vector<std::complex<double>> approximate_roots(std::vector<double> const& a, int max_iter)
{
    using C = std::complex<double>;
    int n = (int)a.size() - 1;
    std::vector<C> z;
    if (n < 1)
        return z;
    // Bini's initial radii from the upper convex hull of (k, log|a_k|)
    std::vector<int> hull;
    for (int k = 0; k <= n; ++k) {
        if (a[k] == 0)
            continue;
        auto lv = [&](int i) { return std::log(std::fabs(a[i])); };
        while (hull.size() >= 2) {
            int i = hull[hull.size() - 2], j = hull.back();
            double cross = (j - i) * (lv(k) - lv(i)) - (k - i) * (lv(j) - lv(i));
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    double const sigma = 0.7;
    if (hull.front() > 0)
        for (int k = 0; k < hull.front(); ++k)
            z.emplace_back(0.0, 0.0);
    for (size_t h = 0; h + 1 < hull.size(); ++h) {
        int k1 = hull[h], k2 = hull[h + 1];
        double u = std::exp((std::log(std::fabs(a[k1])) - std::log(std::fabs(a[k2]))) / (k2 - k1));
        for (int j = 0; j < k2 - k1; ++j) {
            double ang = 2 * M_PI * j / (k2 - k1) + 2 * M_PI * k1 / n + sigma;
            z.push_back(std::polar(u, ang));
        }
    }
    // zero roots stay put; they satisfy p(0) = 0 exactly
    for (int it = 0; it < max_iter; ++it) {
        double maxcorr = 0;
        for (int i = 0; i < n; ++i) {
            C p = a[n], dp = 0;
            for (int k = n - 1; k >= 0; --k) {
                dp = dp * z[i] + p;
                p = p * z[i] + a[k];
            }
            if (p == C(0))
                continue;
            C ratio = p / dp;
            C s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            C w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[i] -= w;
            maxcorr = std::max(maxcorr, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (maxcorr < 1e-17)
            break;
    }
    return z;
}

bool fast_mahler_bounds(std::vector<double> const& a, double& lo, double& hi)
{
    using C = std::complex<double>;
    int n = (int)a.size() - 1;
    if (n < 1 || a[n] == 0)
        return false;
    constexpr double u = 1.1102230246251565e-16; // 2^-53
    std::vector<C> z = approximate_roots(a, 200);
    std::vector<double> rad(n);
    double an = std::fabs(a[n]);
    for (int i = 0; i < n; ++i) {
        C p = a[n];
        double absz = std::abs(z[i]), bound = std::fabs(a[n]);
        for (int k = n - 1; k >= 0; --k) {
            p = p * z[i] + a[k];
            bound = bound * absz + std::fabs(a[k]);
        }
        double err = 16.0 * (n + 1) * u * bound;
        double den = an;
        for (int j = 0; j < n; ++j)
            if (j != i)
                den *= std::abs(z[i] - z[j]);
        den *= (1 - 8.0 * n * u);
        if (!(den > 0) || !std::isfinite(den))
            return false;
        rad[i] = n * (std::abs(p) + err) / den * (1 + 16 * u);
        if (!std::isfinite(rad[i]))
            return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(std::abs(z[i] - z[j]) * (1 - 4 * u) > (rad[i] + rad[j]) * (1 + 4 * u)))
                return false;
    double l = an, h = an;
    for (int i = 0; i < n; ++i) {
        double m = std::abs(z[i]);
        double ml = m * (1 - 4 * u) - rad[i], mh = m * (1 + 4 * u) + rad[i];
        l *= std::max(1.0, ml);
        h *= std::max(1.0, mh);
    }
    lo = l * (1 - 4.0 * (n + 2) * u);
    hi = h * (1 + 4.0 * (n + 2) * u);
    return std::isfinite(hi);
}

// ------------------------------------------------------ multiprecision part

namespace {

struct BC {
    BigFloat re, im;
};

BC cmul(BC const& a, BC const& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
BC cadd(BC const& a, BC const& b) { return {a.re + b.re, a.im + b.im}; }
BC csub(BC const& a, BC const& b) { return {a.re - b.re, a.im - b.im}; }
BC cdiv(BC const& a, BC const& b)
{
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat cabs2(BC const& a) { return a.re * a.re + a.im * a.im; }

/* Aberth iterations at precision prec; returns true if converged. */
bool aberth_mp(std::vector<BigFloat> const& coef, std::vector<BC>& z, mpfr_prec_t prec, int max_iter)
{
    int n = (int)coef.size() - 1;
    BigFloat one(1.0, prec);
    BigFloat tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -2 * (long)(prec - 8), MPFR_RNDN); // squared relative tolerance
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            BC p{coef[n], BigFloat(prec)}, dp{BigFloat(prec), BigFloat(prec)};
            for (int k = n - 1; k >= 0; --k) {
                dp = cadd(cmul(dp, z[i]), p);
                p = cmul(p, z[i]);
                p.re = p.re + coef[k];
            }
            if (p.re.is_zero() && p.im.is_zero())
                continue;
            if (dp.re.is_zero() && dp.im.is_zero()) {
                done = false;
                continue;
            }
            BC ratio = cdiv(p, dp);
            BC s{BigFloat(prec), BigFloat(prec)};
            bool clash = false;
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                BC d = csub(z[i], z[j]);
                if (d.re.is_zero() && d.im.is_zero()) {
                    clash = true;
                    break;
                }
                s = cadd(s, cdiv(BC{one, BigFloat(prec)}, d));
            }
            if (clash) {
                z[i].re = z[i].re + BigFloat(1e-3, prec);
                done = false;
                continue;
            }
            BC den = csub(BC{one, BigFloat(prec)}, cmul(ratio, s));
            if (den.re.is_zero() && den.im.is_zero())
                continue;
            BC w = cdiv(ratio, den);
            z[i] = csub(z[i], w);
            BigFloat scale = cabs2(z[i]);
            if (scale < one)
                scale = one;
            if (!(cabs2(w) <= tol * scale))
                done = false;
        }
        if (done)
            return true;
    }
    return false;
}

/* Smith radii r_i = n |p(z_i)| / |a_n prod (z_i - z_j)|; false if undefined. */
bool smith_radii(IntPolynomial const& g, std::vector<BC> const& z, mpfr_prec_t prec, std::vector<BigFloat>& rad)
{
    int n = g.degree();
    std::vector<Interval> A;
    for (int k = 0; k <= n; ++k)
        A.emplace_back(g[k], prec);
    std::vector<CInterval> Z;
    for (auto const& c : z)
        Z.emplace_back(Interval(c.re, c.re), Interval(c.im, c.im));
    rad.assign(n, BigFloat(prec));
    Interval nn((long)n, prec);
    for (int i = 0; i < n; ++i) {
        CInterval p(Interval(A[n]), Interval(prec));
        for (int k = n - 1; k >= 0; --k) {
            p = p * Z[i];
            p.re = p.re + A[k];
        }
        CInterval d(Interval(A[n]), Interval(prec));
        for (int j = 0; j < n; ++j)
            if (j != i)
                d = d * (Z[i] - Z[j]);
        Interval dabs = abs(d);
        if (dabs.lo().sign() <= 0)
            return false;
        Interval r = nn * abs(p) / dabs;
        rad[i] = r.hi();
    }
    return true;
}

/* |c_i - c_j| > r_i + r_j, certified */
bool disks_apart(RootDisk const& a, RootDisk const& b)
{
    mpfr_prec_t p = std::max(a.re.prec(), b.re.prec());
    Interval dx = Interval(a.re, a.re) - Interval(b.re, b.re);
    Interval dy = Interval(a.im, a.im) - Interval(b.im, b.im);
    Interval dist = sqrt(sqr(dx) + sqr(dy));
    BigFloat rr(p);
    mpfr_add(rr.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    return rr < dist.lo();
}

/* could the mirror image of a meet b? */
bool mirror_meets(RootDisk const& a, RootDisk const& b)
{
    RootDisk m{a.re, -a.im, a.rad, 1};
    return !disks_apart(m, b);
}

enum class Outcome { ok, refine };

/* Pair conjugates, snap real roots to the axis, symmetrize pairs. */
Outcome symmetrize(std::vector<RootDisk>& d)
{
    int n = (int)d.size();
    std::vector<int> partner(n, -1);
    for (int i = 0; i < n; ++i) {
        int cnt = 0;
        for (int j = 0; j < n; ++j)
            if (mirror_meets(d[i], d[j])) {
                ++cnt;
                partner[i] = j;
            }
        if (cnt != 1)
            return Outcome::refine;
    }
    for (int i = 0; i < n; ++i)
        if (partner[partner[i]] != i)
            return Outcome::refine;
    for (int i = 0; i < n; ++i) {
        int j = partner[i];
        if (j == i) {
            BigFloat r(d[i].rad.prec());
            BigFloat ai = abs(d[i].im);
            mpfr_add(r.get(), d[i].rad.get(), ai.get(), MPFR_RNDU);
            d[i].rad = r;
            mpfr_set_zero(d[i].im.get(), 1);
        } else if (i < j) {
            int master = (d[i].im > d[j].im) ? i : j, other = master == i ? j : i;
            if (d[master].im.sign() <= 0)
                return Outcome::refine;
            d[other].re = d[master].re;
            d[other].im = -d[master].im;
            d[other].rad = d[master].rad;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!disks_apart(d[i], d[j]))
                return Outcome::refine;
    return Outcome::ok;
}

std::vector<RootDisk> isolate_squarefree(IntPolynomial const& g, BigFloat const& target, mpfr_prec_t& prec)
{
    int n = g.degree();
    std::vector<double> ad;
    for (auto const& c : g.coeffs())
        ad.push_back(c.get_d());
    std::vector<std::complex<double>> z0 = approximate_roots(ad);
    std::vector<BC> z;
    for (auto const& c : z0)
        z.push_back({BigFloat(c.real(), prec), BigFloat(c.imag(), prec)});
    int cap = precision_cap();
    while (true) {
        std::vector<BigFloat> coef;
        for (auto const& c : g.coeffs())
            coef.emplace_back(c, prec);
        for (auto& c : z) {
            c.re.set_prec_round(prec);
            c.im.set_prec_round(prec);
        }
        aberth_mp(coef, z, prec, 60 + 4 * n);
        std::vector<BigFloat> rad;
        if (smith_radii(g, z, prec, rad)) {
            std::vector<RootDisk> d;
            bool small = true;
            for (int i = 0; i < n; ++i) {
                d.push_back({z[i].re, z[i].im, rad[i], 1});
                if (target < rad[i])
                    small = false;
            }
            if (small && symmetrize(d) == Outcome::ok) {
                bool still_small = true;
                for (auto const& x : d)
                    if (target < x.rad)
                        still_small = false;
                if (still_small)
                    return d;
            }
        }
        if (prec >= cap)
            throw PrecisionExhausted("root isolation of " + to_csv(g) + " did not certify within " +
                                     std::to_string(cap) + " bits");
        prec = std::min<mpfr_prec_t>(2 * prec, cap);
    }
}

} // namespace

std::vector<RootDisk> root_disks(IntPolynomial const& f, BigFloat const& radius_bound)
{
    if (f.degree() < 1)
        throw InvalidInput("root isolation needs degree >= 1");
    auto dec = squarefree_decomposition(f);
    BigFloat target = radius_bound;
    mpfr_prec_t prec = 64;
    int const order_cap = std::min(precision_cap(), 1024);
    while (true) {
        std::vector<RootDisk> all;
        for (auto const& [s, m] : dec) {
            mpfr_prec_t p = prec;
            for (auto& d : isolate_squarefree(s, target, p)) {
                d.multiplicity = m;
                all.push_back(std::move(d));
            }
            prec = std::max(prec, p);
        }
        bool apart = true;
        for (size_t i = 0; i < all.size() && apart; ++i)
            for (size_t j = i + 1; j < all.size() && apart; ++j)
                if (!disks_apart(all[i], all[j]))
                    apart = false;
        if (apart) {
            std::sort(all.begin(), all.end(), [](RootDisk const& a, RootDisk const& b) {
                if (!(a.re == b.re))
                    return a.re < b.re;
                return a.im < b.im;
            });
            // canonical order: distinct real parts must be certified apart
            bool certain = true;
            BigFloat need = target;
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i + 1; j < all.size(); ++j) {
                    if (all[i].re == all[j].re)
                        continue;
                    Interval ri = Interval(all[i].re, all[i].re), rj = Interval(all[j].re, all[j].re);
                    Interval gap = abs(ri - rj);
                    BigFloat rr(prec);
                    mpfr_add(rr.get(), all[i].rad.get(), all[j].rad.get(), MPFR_RNDU);
                    if (!(rr < gap.lo())) {
                        certain = false;
                        BigFloat g4(prec);
                        mpfr_div_ui(g4.get(), gap.lo().get(), 8, MPFR_RNDD);
                        if (g4 < need)
                            need = g4;
                    }
                }
            if (certain || prec >= order_cap) {
                if (!certain) {
                    // real parts agreeing to the ordering precision are grouped and ordered by imaginary part
                    std::vector<size_t> grp(all.size());
                    std::iota(grp.begin(), grp.end(), 0);
                    for (size_t i = 1; i < all.size(); ++i) {
                        Interval gap = abs(Interval(all[i].re, all[i].re) - Interval(all[i - 1].re, all[i - 1].re));
                        BigFloat rr(prec);
                        mpfr_add(rr.get(), all[i].rad.get(), all[i - 1].rad.get(), MPFR_RNDU);
                        grp[i] = (rr < gap.lo()) ? i : grp[i - 1];
                    }
                    std::vector<size_t> idx(all.size());
                    std::iota(idx.begin(), idx.end(), 0);
                    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                        if (grp[a] != grp[b])
                            return grp[a] < grp[b];
                        return all[a].im < all[b].im;
                    });
                    std::vector<RootDisk> sorted;
                    for (size_t k : idx)
                        sorted.push_back(all[k]);
                    all = std::move(sorted);
                }
                return all;
            }
            if (need.is_zero())
                mpfr_div_2ui(need.get(), target.get(), 64, MPFR_RNDD);
            target = need;
            prec = std::min<mpfr_prec_t>(2 * prec, precision_cap());
            continue;
        }
        if (prec >= precision_cap())
            throw PrecisionExhausted("roots of distinct squarefree parts could not be separated");
        mpfr_div_2ui(target.get(), target.get(), 32, MPFR_RNDD);
        prec = std::min<mpfr_prec_t>(2 * prec, precision_cap());
    }
}

std::vector<RootEnclosure> root_enclosures(IntPolynomial const& f, Rational const& radius_bound)
{
    if (radius_bound <= 0)
        throw InvalidInput("radius bound must be positive");
    BigFloat rb(radius_bound, 64, MPFR_RNDD);
    std::vector<RootEnclosure> out;
    for (auto const& d : root_disks(f, rb))
        out.push_back({d.re.to_rational(), d.im.to_rational(), d.rad.to_rational(), d.multiplicity});
    return out;
}

int count_real_roots(IntPolynomial const& f)
{
    std::vector<RatPolynomial> seq{to_rational(f), to_rational(f.derivative())};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        RatPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    auto changes = [&](bool plus_inf) {
        int c = 0, last = 0;
        for (auto const& p : seq) {
            if (p.is_zero())
                continue;
            int s = sgn(p.leading());
            if (!plus_inf && p.degree() % 2 == 1)
                s = -s;
            if (last != 0 && s != last)
                ++c;
            last = s;
        }
        return c;
    };
    return changes(false) - changes(true);
}

} // namespace hc
