#ifndef HEIGHTCENSUS_FACTOR_HPP
#define HEIGHTCENSUS_FACTOR_HPP

#include "heightcensus/polynomial.hpp"

#include <utility>
#include <vector>

namespace hc {

struct Factorization {
    Rational content;
    /* canonical irreducible factors with multiplicities, ascending order */
    std::vector<std::pair<IntPolynomial, int>> factors;

    int count() const
    {
        int n = 0;
        for (auto const& f : factors)
            n += f.second;
        return n;
    }
};

constexpr int kFactorDegreeCap = 16;

Factorization factor_over_rationals(IntPolynomial const& f, int degree_cap = kFactorDegreeCap);

/* Irreducible factors of a primitive squarefree polynomial with positive
 * leading coefficient. */
std::vector<IntPolynomial> factor_squarefree(IntPolynomial const& f, int degree_cap = kFactorDegreeCap);

/* Irreducible over Q (content ignored); false for constants. */
bool is_irreducible(IntPolynomial const& f);

/* Fast certificate: true only if irreducibility is proved by the degree
 * patterns modulo a few primes. False means "unknown". */
bool irreducible_by_degree_sets(IntPolynomial const& f, int primes = 6);

IntPolynomial cyclotomic(long k);

struct CyclotomicSplit {
    std::vector<long> indices; // ascending, with repetition
    IntPolynomial remainder;   // f divided by the cyclotomic factors
};

CyclotomicSplit strip_cyclotomic(IntPolynomial const& f);

} // namespace hc

#endif
