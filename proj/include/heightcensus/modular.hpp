#ifndef HEIGHTCENSUS_MODULAR_HPP
#define HEIGHTCENSUS_MODULAR_HPP

#include "heightcensus/polynomial.hpp"

#include <cstdint>
#include <vector>

/* Polynomials over F_p for word-size odd primes p < 2^31. */
namespace hc::nmod {

using Poly = std::vector<uint64_t>;

void trim(Poly& a);
inline int degree(Poly const& a) { return (int)a.size() - 1; }

uint64_t inv(uint64_t a, uint64_t p);
uint64_t reduce(Integer const& a, uint64_t p);
Poly reduce(IntPolynomial const& f, uint64_t p);

Poly add(Poly const& a, Poly const& b, uint64_t p);
Poly sub(Poly const& a, Poly const& b, uint64_t p);
Poly mul(Poly const& a, Poly const& b, uint64_t p);
Poly scale(Poly const& a, uint64_t s, uint64_t p);
void divrem(Poly const& a, Poly const& b, uint64_t p, Poly* q, Poly* r);
Poly rem(Poly const& a, Poly const& b, uint64_t p);
Poly make_monic(Poly const& a, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);
/* s a + t b = gcd (monic) */
Poly xgcd(Poly const& a, Poly const& b, uint64_t p, Poly* s, Poly* t);
Poly derivative(Poly const& a, uint64_t p);
Poly powmod(Poly const& base, uint64_t e, Poly const& f, uint64_t p);
bool is_squarefree(Poly const& f, uint64_t p);

/* Degrees of the irreducible factors of a squarefree polynomial. */
std::vector<int> factor_degrees(Poly const& f, uint64_t p);
/* Monic irreducible factors of a squarefree polynomial of positive degree. */
std::vector<Poly> factor_squarefree(Poly const& f, uint64_t p);

} // namespace hc::nmod

#endif
