#ifndef HEIGHTCENSUS_POLYNOMIAL_HPP
#define HEIGHTCENSUS_POLYNOMIAL_HPP

#include "heightcensus/integer.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hc {

/* Dense univariate polynomial, constant term first, no trailing zeros.
 * T is Integer or Rational. */
template <class T>
class Polynomial {
    std::vector<T> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Polynomial(std::initializer_list<long> c)
    {
        for (long v : c)
            c_.emplace_back(v);
        trim();
    }

    static Polynomial constant(T const& a) { return Polynomial(std::vector<T>{a}); }
    static Polynomial monomial(T const& a, int k)
    {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(T(1), 1); }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    std::vector<T> const& coeffs() const { return c_; }
    T coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : T(0); }
    T const& leading() const { return c_.back(); }
    T const& operator[](int i) const { return c_[i]; }

    void set_coeff(int i, T const& a)
    {
        if (i >= (int)c_.size())
            c_.resize(i + 1, T(0));
        c_[i] = a;
        trim();
    }

    Polynomial operator-() const
    {
        std::vector<T> c(c_);
        for (auto& a : c)
            a = -a;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(Polynomial const& a, Polynomial const& b)
    {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(Polynomial const& a, Polynomial const& b) { return a + (-b); }
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(T const& s, Polynomial const& a)
    {
        std::vector<T> c(a.c_);
        for (auto& v : c)
            v *= s;
        return Polynomial(std::move(c));
    }
    Polynomial& operator+=(Polynomial const& b) { return *this = *this + b; }
    Polynomial& operator-=(Polynomial const& b) { return *this = *this - b; }
    Polynomial& operator*=(Polynomial const& b) { return *this = *this * b; }

    friend bool operator==(Polynomial const& a, Polynomial const& b) { return a.c_ == b.c_; }
    friend bool operator!=(Polynomial const& a, Polynomial const& b) { return !(a == b); }

    /* lexicographic on (degree, coefficients from the top) */
    friend bool operator<(Polynomial const& a, Polynomial const& b)
    {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.c_[i] != b.c_[i])
                return a.c_[i] < b.c_[i];
        return false;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * T((long)i);
        return Polynomial(std::move(c));
    }

    template <class U>
    U evaluate(U const& x) const
    {
        U r(0);
        for (int i = degree(); i >= 0; --i)
            r = r * x + U(c_[i]);
        return r;
    }

    /* x^deg f(1/x) */
    Polynomial reversed() const
    {
        std::vector<T> c(c_.rbegin(), c_.rend());
        return Polynomial(std::move(c));
    }

    /* f(a x) */
    Polynomial scaled(T const& a) const
    {
        std::vector<T> c(c_);
        T p(1);
        for (auto& v : c) {
            v *= p;
            p *= a;
        }
        return Polynomial(std::move(c));
    }

    /* f(-x) */
    Polynomial negated_variable() const { return scaled(T(-1)); }

    /* f(x + a) */
    Polynomial taylor_shift(T const& a) const
    {
        std::vector<T> c(c_);
        int n = (int)c.size();
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j)
                c[j] += a * c[j + 1];
        return Polynomial(std::move(c));
    }

    /* f(g(x)) */
    Polynomial compose(Polynomial const& g) const
    {
        Polynomial r;
        for (int i = degree(); i >= 0; --i)
            r = r * g + constant(c_[i]);
        return r;
    }
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/* Serialization "c0,c1,...,cd". */
IntPolynomial parse_polynomial(std::string_view s);
std::string to_csv(IntPolynomial const& f);
std::string to_pretty(IntPolynomial const& f);

Integer content(IntPolynomial const& f);
IntPolynomial primitive_part(IntPolynomial const& f);
/* positive leading coefficient and content 1 */
IntPolynomial canonical(IntPolynomial const& f);
bool is_canonical(IntPolynomial const& f);
Integer norm_inf(IntPolynomial const& f);
Integer norm2_sq(IntPolynomial const& f);

RatPolynomial to_rational(IntPolynomial const& f);
/* clears denominators; result primitive with the sign of f's lead */
IntPolynomial clear_denominators(RatPolynomial const& f);

/* Euclidean division over Q. */
std::pair<RatPolynomial, RatPolynomial> divmod(RatPolynomial const& a, RatPolynomial const& b);
RatPolynomial monic(RatPolynomial const& f);

/* lead(b)^(da-db+1) a = q b + r */
IntPolynomial pseudo_remainder(IntPolynomial const& a, IntPolynomial const& b);

/* a / b if b divides a in Z[x], else false */
bool exact_divide(IntPolynomial const& a, IntPolynomial const& b, IntPolynomial* q);
IntPolynomial exact_quotient(IntPolynomial const& a, IntPolynomial const& b);

/* primitive canonical gcd */
IntPolynomial gcd(IntPolynomial const& a, IntPolynomial const& b);
RatPolynomial gcd(RatPolynomial const& a, RatPolynomial const& b);

Integer resultant(IntPolynomial const& a, IntPolynomial const& b);
Integer poly_discriminant(IntPolynomial const& f);

/* Yun decomposition of a nonzero polynomial: pairs (s_i, i), s_i canonical
 * squarefree and pairwise coprime, f = c * prod s_i^i. */
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(IntPolynomial const& f);
IntPolynomial squarefree_part(IntPolynomial const& f);
bool is_squarefree(IntPolynomial const& f);

/* Lagrange interpolation through (x_i, y_i) with distinct x_i. */
RatPolynomial interpolate(std::vector<Rational> const& xs, std::vector<Rational> const& ys);

} // namespace hc

#endif
