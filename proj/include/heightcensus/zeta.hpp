#ifndef HEIGHTCENSUS_ZETA_HPP
#define HEIGHTCENSUS_ZETA_HPP

#include "heightcensus/interval.hpp"

namespace hc {

/* Exact Bernoulli number B_k. */
Rational bernoulli(int k);

/* zeta(s, a) for integer s >= 2 and rational 0 < a <= 1, by Euler-Maclaurin
 * summation with the remainder bounded by the first omitted term. */
Interval hurwitz_zeta(long s, Rational const& a, mpfr_prec_t prec);

Interval riemann_zeta(long s, mpfr_prec_t prec);

/* L(s, chi_D) with chi_D(m) = (D/m), s >= 2; D = 1 gives zeta(s). */
Interval dirichlet_l(Integer const& D, long s, mpfr_prec_t prec);

/* L(1, chi_D) for a fundamental discriminant D != 1, from the finite
 * closed forms (sum of chi(a) a for D < 0, of chi(a) log sin(pi a/D) for D > 0). */
Interval dirichlet_l1(Integer const& D, mpfr_prec_t prec);

/* zeta(s) L(s, chi_D): the Dedekind zeta function of Q(sqrt D), or of Q for D = 1. */
Interval dedekind_zeta(Integer const& D, long s, mpfr_prec_t prec);

} // namespace hc

#endif
