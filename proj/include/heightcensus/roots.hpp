#ifndef HEIGHTCENSUS_ROOTS_HPP
#define HEIGHTCENSUS_ROOTS_HPP

#include "heightcensus/certified.hpp"
#include "heightcensus/polynomial.hpp"

#include <complex>
#include <vector>

namespace hc {

struct RootEnclosure {
    Rational re, im, radius;
    int multiplicity = 1;
};

/* Certified disk around one root: center (re, im), radius rad (an upper bound). */
struct RootDisk {
    BigFloat re, im, rad;
    int multiplicity = 1;

    CInterval box() const;
    Interval modulus() const;
    bool is_real() const { return im.is_zero(); }
};

/* Distinct roots of f in canonical order: by real part, then imaginary part.
 * Roots whose real parts cannot be separated at the ordering precision are
 * treated as having equal real part. Real roots have im = 0 exactly and
 * conjugate pairs have exactly conjugate centers. */
std::vector<RootDisk> root_disks(IntPolynomial const& f, BigFloat const& radius_bound);

std::vector<RootEnclosure> root_enclosures(IntPolynomial const& f, Rational const& radius_bound);

/* Aberth iteration in double precision; returns approximations only. */
std::vector<std::complex<double>> approximate_roots(std::vector<double> const& coeffs, int max_iter = 500);

/* Rigorous enclosure of the Mahler measure from double-precision root
 * approximations (coefficients must be exactly representable doubles).
 * Returns false when certification fails. */
bool fast_mahler_bounds(std::vector<double> const& coeffs, double& lo, double& hi);

/* Number of real roots of a squarefree polynomial, by Sturm sequence. */
int count_real_roots(IntPolynomial const& f);

} // namespace hc

#endif
