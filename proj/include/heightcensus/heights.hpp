#ifndef HEIGHTCENSUS_HEIGHTS_HPP
#define HEIGHTCENSUS_HEIGHTS_HPP

#include "heightcensus/certified.hpp"
#include "heightcensus/mahler.hpp"
#include "heightcensus/number_field.hpp"

#include <optional>
#include <vector>

namespace hc {

/* The root with canonical index root_index of the canonical irreducible minpoly. */
struct AlgebraicNumber {
    IntPolynomial minpoly;
    int root_index = 0;

    int degree() const { return minpoly.degree(); }
    friend bool operator==(AlgebraicNumber const& a, AlgebraicNumber const& b)
    {
        return a.root_index == b.root_index && a.minpoly == b.minpoly;
    }
};

/* Validates canonical form, irreducibility and the index. */
AlgebraicNumber make_algebraic(IntPolynomial const& D, int root_index);
AlgebraicNumber rational_number(Rational const& q);

struct HeightValue {
    CertifiedReal value;
    int degree = 1;
    /* M(D) when rational; then H = mahler^(1/degree) exactly */
    std::optional<Rational> mahler;

    bool exact() const { return mahler.has_value(); }
};

/* 10^-30 */
Rational default_height_eps();

/* H(alpha) = M(D)^(1/d), relative width about eps. */
HeightValue height(AlgebraicNumber const& a, Rational const& eps = default_height_eps());
HeightValue height_of_polynomial(IntPolynomial const& D, Rational const& eps);

Integer naive_height(AlgebraicNumber const& a);

/* (H/2)^d <= |D| <= (2H)^d, decided exactly. */
bool check_height_sandwich(AlgebraicNumber const& a);

/* M_0 of a monic f over K by the root route: product of H(beta) over the roots. */
CertifiedReal m0(KPoly const& f, Rational const& eps);

/* M_0 for quadratic K from the places: Mahler measures at the infinite
 * places and the norm of the coefficient ideal at the finite ones. */
CertifiedReal m0_adelic(KPoly const& f, Rational const& eps);

/* Norm of the fractional ideal generated by the elements in the maximal
 * order of a quadratic field (or Q). */
Rational ideal_norm(NumberField const& K, std::vector<FieldElement> const& gens);

/* Weil height of (x_0 : ... : x_n) over K with [K:Q] <= 2. */
CertifiedReal height_projective(std::vector<FieldElement> const& coords, Rational const& eps);

struct MinimalGenerator {
    HeightValue delta;
    AlgebraicNumber witness;
    long candidates = 0; // generators of K met during the scan
};

/* delta(K) = min H(alpha) over alpha with Q(alpha) = K. Throws CapExceeded
 * when the height of K's own generator exceeds search_cap. */
MinimalGenerator delta_exact(NumberField const& K, Rational const& search_cap);

struct NaiveMinimalGenerator {
    Integer pi;
    AlgebraicNumber witness;
};

/* pi(K) = min |D_alpha| over generators. */
NaiveMinimalGenerator pi_exact(NumberField const& K, Integer const& search_cap);

struct SilvermanCheck {
    bool holds = false;
    bool equality = false;
    CertifiedReal lhs, rhs; // delta(K) and e^(-1/(2(e-1))) |disc|^(1/(2e(e-1)))
};

/* Quadratic K only. */
SilvermanCheck check_silverman(NumberField const& K);

/* R_K h_K / delta^(e(e-1) + 1/20), reported without any asserted bound. */
CertifiedReal regulator_class_ratio(NumberField const& K, HeightValue const& delta);

/* H(P) >= delta(K) / (e (n+1)) for a point whose coordinates generate K. */
bool check_primitive_point_bound(std::vector<FieldElement> const& coords, HeightValue const& delta);

/* Exact comparison of Mahler measures of two irreducible quadratics (or linear). */
Cmp compare_mahler_small(IntPolynomial const& a, IntPolynomial const& b);

} // namespace hc

#endif
