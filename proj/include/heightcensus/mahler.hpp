#ifndef HEIGHTCENSUS_MAHLER_HPP
#define HEIGHTCENSUS_MAHLER_HPP

#include "heightcensus/certified.hpp"
#include "heightcensus/polynomial.hpp"

#include <optional>

namespace hc {

enum class Cmp { LT, EQ, GT };
char const* to_string(Cmp c);

/* Relative width <= eps; exact (lo == hi) whenever M(f) is found rational. */
CertifiedReal mahler_measure(IntPolynomial const& f, Rational const& eps);

/* M(f) exactly when it is provably rational by closed forms (degree <= 2 or
 * after removing cyclotomic factors), otherwise empty. */
std::optional<Rational> mahler_exact(IntPolynomial const& f);

/* Exact trichotomy of M(f) against q > 0. */
Cmp compare_mahler(IntPolynomial const& f, Rational const& q);

/* Subset-product polynomial prod_{|T|=k} (z - lead * prod_{i in T} root_i). */
IntPolynomial subset_product_polynomial(IntPolynomial const& f, int k);

/* Lower bound (squared) on the distance between distinct roots of a
 * squarefree integer polynomial, from Mahler's inequality. */
Rational root_separation_sq_lower(IntPolynomial const& g);

constexpr int kExactFallbackDegreeCap = 10;

} // namespace hc

#endif
