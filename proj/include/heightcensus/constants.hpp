#ifndef HEIGHTCENSUS_CONSTANTS_HPP
#define HEIGHTCENSUS_CONSTANTS_HPP

#include "heightcensus/certified.hpp"
#include "heightcensus/number_field.hpp"

#include <cstdint>
#include <vector>

namespace hc {

/* (n+1)^l prod_{i=1}^{l} (2i)^(n-2i) / (2i+1)^(n+1-2i), l = floor((n-1)/2) */
Rational v_real(int n);
/* (n+1)^(n+1) / ((n+1)!)^2 */
Rational v_complex(int n);

enum class Place { real, complex };

struct VolumeEstimate {
    double estimate = 0;       // normalized: vol / 2^(n+1) (real) or vol / pi^(n+1) (complex)
    double standard_error = 0; // same normalization
    long long hits = 0, samples = 0;
};

/* Monte-Carlo volume of {a : M(a) <= 1} sampled uniformly from [-2^n, 2^n]^(n+1)
 * (per real and imaginary part for complex). Sample i only depends on (seed, i). */
VolumeEstimate mc_volume(int n, Place place, long long samples, std::uint64_t seed, int workers = 1);

/* Double-precision Mahler measure of a real or complex coefficient vector (constant first). */
double mahler_double(std::vector<double> const& a);
double mahler_double_complex(std::vector<double> const& re, std::vector<double> const& im);

/* S_K(n) for K = Q or quadratic, relative width <= eps. R_K = 1 when K has no real unit rank. */
CertifiedReal schanuel(NumberField const& K, int n, Rational const& eps);

/* d V_R(d) S_Q(d), the leading coefficient of Z(1, d, X). */
CertifiedReal mv_slope(int d, Rational const& eps);

/* n V_R(n)^r V_C(n)^s S_K(n), the predicted coefficient of X^(en(n+1)) in count_relative. */
CertifiedReal predicted_relative_slope(NumberField const& K, int n, Rational const& eps);

struct LeadingConstantPartial {
    int e = 2, n = 0;
    long disc_bound = 0;
    CertifiedReal partial_sum;
    CertifiedReal last_term; // term of the largest |disc| included (0 for an empty sum)
    std::vector<std::pair<Integer, CertifiedReal>> terms;
};

/* Sum over quadratic K with |disc| <= disc_bound of predicted_relative_slope(K, n). */
LeadingConstantPartial leading_constant_partial(int n, long disc_bound, Rational const& eps);

} // namespace hc

#endif
