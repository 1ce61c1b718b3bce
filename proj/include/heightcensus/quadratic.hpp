#ifndef HEIGHTCENSUS_QUADRATIC_HPP
#define HEIGHTCENSUS_QUADRATIC_HPP

#include "heightcensus/certified.hpp"
#include "heightcensus/number_field.hpp"

#include <vector>

namespace hc {

/* eps = (t + u sqrt(D)) / 2 > 1 with norm +-1 */
struct FundamentalUnit {
    Integer t, u;
    int norm = 1;
};

struct QuadraticInvariants {
    Integer disc;
    long h = 0;
    CertifiedReal regulator; // exactly 0 for imaginary fields
    int w = 2;
    int r = 0, s = 0;
    FundamentalUnit unit; // t = u = 0 for imaginary fields
};

/* Discriminant of the field Q[x]/(g) for quadratic g. */
Integer field_discriminant(NumberField const& K);

/* Generator of the maximal order: x^2 - D/4 or x^2 - x + (1 - D)/4. */
IntPolynomial quadratic_generator(Integer const& D);

FundamentalUnit fundamental_unit(Integer const& D);

/* Class number by reduced forms: a count for D < 0, cycles of reduced
 * indefinite forms (narrow classes) for D > 0. */
long class_number_forms(Integer const& D);

/* Class number from h = w sqrt|D| L(1) / (2 pi) or sqrt(D) L(1) / (2 log eps). */
long class_number_dirichlet(Integer const& D);

QuadraticInvariants quadratic_invariants(Integer const& D, mpfr_prec_t prec = 128);
QuadraticInvariants quadratic_invariants(NumberField const& K, mpfr_prec_t prec = 128);

/* Fundamental discriminants with |D| <= bound, ordered by |D|, negative first. */
std::vector<Integer> fundamental_discriminants(long bound);
std::vector<NumberField> enumerate_quadratic_fields(long bound);

/* zeta_K(s) for quadratic K (or K = Q) with relative width <= eps. */
CertifiedReal dedekind_zeta_quadratic(NumberField const& K, long s, Rational const& eps);

} // namespace hc

#endif
