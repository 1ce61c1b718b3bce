#ifndef HEIGHTCENSUS_ENUMERATE_HPP
#define HEIGHTCENSUS_ENUMERATE_HPP

#include "heightcensus/polynomial.hpp"

#include <functional>

namespace hc {

struct EnumConfig {
    int workers = 1;
    double candidate_cap = 1e9;
    bool irreducible_only = true;
    bool nonzero_constant = true; // only consulted when irreducible_only is false
};

struct EnumStats {
    double box_size = 0;      // coefficient vectors in the search box
    long long candidates = 0; // vectors surviving the cheap filters
    long long exact_checks = 0;
    long long accepted = 0;
};

/* Coefficient bounds |a_i| <= C(d,i) B and 1 <= lead <= B, from M >= |a_i| / C(d,i). */
std::vector<Integer> coefficient_limits(int d, Rational const& mahler_bound);
double box_estimate(int d, Rational const& mahler_bound);

/* Calls visit(worker, D) for every canonical polynomial D of degree d with
 * M(D) <= mahler_bound (boundary decided exactly), irreducible over Q unless
 * cfg.irreducible_only is false (then only primitive, with D(0) != 0 unless
 * cfg.nonzero_constant is also false).
 * Workers own disjoint slices of the (lead, next coefficient) prefix space;
 * visit must only touch per-worker state. Throws BoxRefused above the cap. */
EnumStats enumerate_polynomials(int d, Rational const& mahler_bound, EnumConfig const& cfg,
                                std::function<void(int, IntPolynomial const&)> const& visit);

/* M(D) <= B, exactly, with cheap integer and double filters first. */
bool mahler_at_most(IntPolynomial const& D, Rational const& B);

} // namespace hc

#endif
