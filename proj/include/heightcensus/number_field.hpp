#ifndef HEIGHTCENSUS_NUMBER_FIELD_HPP
#define HEIGHTCENSUS_NUMBER_FIELD_HPP

#include "heightcensus/polynomial.hpp"
#include "heightcensus/roots.hpp"

#include <memory>
#include <vector>

namespace hc {

class FieldElement;

/* Q[x]/(g) for a canonical irreducible g. Q itself is Q[x]/(x). */
class NumberField {
    struct Data {
        IntPolynomial g;
        RatPolynomial gm; // monic g
        int r = 0, s = 0;
    };
    std::shared_ptr<Data const> d_;

public:
    NumberField();
    static NumberField rationals() { return NumberField(); }

    IntPolynomial const& generator() const { return d_->g; }
    RatPolynomial const& monic_generator() const { return d_->gm; }
    int degree() const { return d_->g.degree(); }
    int real_places() const { return d_->r; }
    int complex_places() const { return d_->s; }

    FieldElement theta() const;
    FieldElement element(Rational const& q) const;
    FieldElement element(RatPolynomial const& v) const;
    FieldElement zero() const;
    FieldElement one() const;

    /* e embeddings in canonical root order, as certified disks of radius <= rad */
    std::vector<RootDisk> embeddings(Rational const& rad) const;

    /* same generator polynomial (identity of presentation, not isomorphism) */
    friend bool operator==(NumberField const& a, NumberField const& b)
    {
        return a.d_ == b.d_ || a.d_->g == b.d_->g;
    }
    friend bool operator!=(NumberField const& a, NumberField const& b) { return !(a == b); }

    friend NumberField make_field(IntPolynomial const& g);
};

/* Throws InvalidInput unless g is canonical and irreducible of degree >= 1. */
NumberField make_field(IntPolynomial const& g);

/* Element of K in the power basis: v(theta) with deg v < [K:Q]. */
class FieldElement {
    NumberField K_;
    RatPolynomial v_;

public:
    FieldElement() = default;
    FieldElement(NumberField K, RatPolynomial v);

    NumberField const& field() const { return K_; }
    RatPolynomial const& rep() const { return v_; }
    Rational coord(int i) const { return v_.coeff(i); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_rational() const { return v_.degree() <= 0; }
    Rational rational_value() const { return v_.coeff(0); }

    FieldElement operator-() const { return FieldElement(K_, -v_); }
    friend FieldElement operator+(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator-(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator*(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator/(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator*(Rational const& q, FieldElement const& a) { return FieldElement(a.K_, q * a.v_); }
    FieldElement& operator+=(FieldElement const& b) { return *this = *this + b; }
    FieldElement& operator-=(FieldElement const& b) { return *this = *this - b; }
    FieldElement& operator*=(FieldElement const& b) { return *this = *this * b; }
    friend bool operator==(FieldElement const& a, FieldElement const& b) { return a.v_ == b.v_; }
    friend bool operator!=(FieldElement const& a, FieldElement const& b) { return !(a == b); }

    FieldElement inverse() const;
    FieldElement pow(long k) const;
};

/* N_{K/Q}(a) and Tr_{K/Q}(a). */
Rational norm(FieldElement const& a);
Rational trace(FieldElement const& a);

/* Characteristic polynomial of a over Q (monic, degree [K:Q]). */
RatPolynomial charpoly(FieldElement const& a);
/* Canonical minimal polynomial of a over Q. */
IntPolynomial minpoly(FieldElement const& a);

/* a(theta) at a complex embedding given as a box around theta. */
CInterval embed(FieldElement const& a, CInterval const& theta);

/* Polynomial in K[x], constant term first, no trailing zeros. */
class KPoly {
    NumberField K_;
    std::vector<FieldElement> c_;
    void trim();

public:
    KPoly() = default;
    explicit KPoly(NumberField K) : K_(std::move(K)) {}
    KPoly(NumberField K, std::vector<FieldElement> c);
    KPoly(NumberField K, IntPolynomial const& f);
    KPoly(NumberField K, RatPolynomial const& f);

    NumberField const& field() const { return K_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    std::vector<FieldElement> const& coeffs() const { return c_; }
    FieldElement coeff(int i) const;
    FieldElement const& leading() const { return c_.back(); }
    FieldElement const& operator[](int i) const { return c_[i]; }

    bool is_monic() const;
    bool has_rational_coeffs() const;
    RatPolynomial to_rational() const; // requires has_rational_coeffs

    friend KPoly operator+(KPoly const& a, KPoly const& b);
    friend KPoly operator-(KPoly const& a, KPoly const& b);
    friend KPoly operator*(KPoly const& a, KPoly const& b);
    friend KPoly operator*(FieldElement const& s, KPoly const& a);
    KPoly operator-() const;
    friend bool operator==(KPoly const& a, KPoly const& b) { return a.c_ == b.c_; }
    friend bool operator!=(KPoly const& a, KPoly const& b) { return !(a == b); }

    KPoly derivative() const;
    FieldElement evaluate(FieldElement const& x) const;
    /* f(x + a) */
    KPoly taylor_shift(FieldElement const& a) const;
};

std::pair<KPoly, KPoly> divmod(KPoly const& a, KPoly const& b);
KPoly monic(KPoly const& f);
KPoly gcd(KPoly const& a, KPoly const& b);

/* Image of f under the field map K -> L sending theta_K to `image`. */
KPoly map_coefficients(KPoly const& f, FieldElement const& image);
FieldElement map_element(FieldElement const& a, FieldElement const& image);

/* Norm_{K/Q}(f) = prod over embeddings of sigma f, as a rational polynomial. */
RatPolynomial norm(KPoly const& f);

std::string to_string(FieldElement const& a);
std::string to_string(KPoly const& f);

/* Monic irreducible factors over K with multiplicities. Cap: deg f * [K:Q] <= 24. */
std::vector<std::pair<KPoly, int>> factor_over_field(IntPolynomial const& f, NumberField const& K);
std::vector<std::pair<KPoly, int>> factor_over_field(KPoly const& f);

/* Internal entry point with an explicit cap on deg f * [K:Q]. */
std::vector<KPoly> factor_squarefree_over_field(KPoly const& f, int cap);

constexpr int kFieldFactorCap = 24;

bool is_irreducible_over(KPoly const& f);

/* Isomorphism test: equal degree and K1's generator has a root in K2. */
bool field_equals(NumberField const& K1, NumberField const& K2);

struct RelativeDegree {
    std::vector<int> degrees; // ascending
    int root_degree = 0;      // degree of the factor vanishing at the chosen root
};

/* Factor degrees of D over K, and [K(beta):K] for beta the root of D with
 * the given canonical index, K embedded by its first canonical root. */
RelativeDegree relative_degree(IntPolynomial const& D, NumberField const& K, int root_index = 0);

/* Splitting field of K's generator (deg K <= 3) with the images of theta. */
struct SplittingField {
    NumberField L;
    std::vector<FieldElement> theta_images; // one per embedding of K, the first is the base embedding
};
SplittingField splitting_field(NumberField const& K);

struct Conjugates {
    SplittingField split;
    std::vector<KPoly> polys; // sigma f inside L[x]
    bool pairwise_coprime = false;
};
Conjugates conjugate_polys(KPoly const& f);

} // namespace hc

#endif
