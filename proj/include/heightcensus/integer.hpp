#ifndef HEIGHTCENSUS_INTEGER_HPP
#define HEIGHTCENSUS_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hc {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view s);

/* Accepts "p", "p/q" and terminating decimals such as "1.25", all exact. */
Rational parse_rational(std::string_view s);

std::string to_string(Integer const& z);
std::string to_string(Rational const& q);

Integer isqrt(Integer const& n);
bool is_square(Integer const& n, Integer* root = nullptr);
Integer binomial(unsigned long n, unsigned long k);
Integer ipow(Integer const& b, unsigned long e);
Rational qpow(Rational const& b, long e);

/* floor and ceiling of a rational */
Integer floor_q(Rational const& q);
Integer ceil_q(Rational const& q);

/* prime factorization of |n| (n != 0), primes ascending */
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

/* Largest s with s^2 | n. */
Integer square_part_root(Integer const& n);

bool is_fundamental_discriminant(Integer const& d);

/* Discriminant of Q(sqrt(d)) for a non-square d. */
Integer fundamental_discriminant(Integer const& d);

int kronecker_symbol(Integer const& d, Integer const& m);
int kronecker_symbol(long d, long m);

long euler_phi(long n);

} // namespace hc

#endif
