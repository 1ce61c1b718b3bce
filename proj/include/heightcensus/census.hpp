#ifndef HEIGHTCENSUS_CENSUS_HPP
#define HEIGHTCENSUS_CENSUS_HPP

#include "heightcensus/enumerate.hpp"
#include "heightcensus/number_field.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hc {

enum class ClassTag { not_primitive, lower_degree, reducible, ncp, cp };
char const* to_string(ClassTag t);

struct ClassTally {
    long long not_primitive = 0, lower = 0, red = 0, ncp = 0, cp = 0;

    void add(ClassTag t);
    long long total() const { return not_primitive + lower + red + ncp + cp; }
    ClassTally& operator+=(ClassTally const& o);
    friend bool operator==(ClassTally const& a, ClassTally const& b)
    {
        return a.not_primitive == b.not_primitive && a.lower == b.lower && a.red == b.red && a.ncp == b.ncp &&
               a.cp == b.cp;
    }
};

struct FieldRow {
    Integer disc; // field discriminant (1 for Q)
    NumberField field;
    long long Z_K = 0, Zbar_K = 0;
    bool has_tally = false;
    ClassTally tally;
};

struct CensusReport {
    int e = 0, n = 0;
    Rational X;
    long long Z = 0, Zbar = 0;
    std::vector<FieldRow> fields; // ordered by |disc|, negative first
    long long sum_ZK = 0, sum_ZbarK = 0;
    long long residual = 0; // Z - sum_K (Z_K - Zbar_K) - Zbar
    bool inequality_holds = false; // Zbar <= sum Zbar_K <= 2^(en) Zbar
    double seconds = 0;
    double box = 0;
    long long candidates = 0, polynomials = 0;
};

struct CensusConfig {
    int workers = 1;
    double candidate_cap = 1e9;
    bool tallies = false; // classify M_K(n, X^n) for every field row
};

/* Numbers of degree d with H <= X, grouped by minimal polynomial: visit(worker, D)
 * stands for the d roots of D (root indices 0..d-1). */
EnumStats enumerate_numbers(int d, Rational const& X, EnumConfig const& cfg,
                            std::function<void(int, IntPolynomial const&)> const& visit);
long long count_numbers(int d, Rational const& X, EnumConfig const& cfg = {});

/* All degree-e subfields of Q[x]/(D), for e in {1, 2, deg D}. */
std::vector<NumberField> subfields_of_degree(IntPolynomial const& D, int e);

/* Resolvent cubic y^3 - p y^2 - 4 r y + 4 p r - q^2 of the depressed quartic, primitive. */
IntPolynomial quartic_resolvent_cubic(IntPolynomial const& D);
bool quartic_subfield_resolvent(IntPolynomial const& D);

/* Exact Z(e, n, X), Zbar and the per-field counts; e in {1, 2}, n >= 2 when e = 2, en <= 6. */
CensusReport count_Z(int e, int n, Rational const& X, CensusConfig const& cfg = {});

/* Q(P_f) = K: the coefficients generate the field of f. */
bool coefficients_generate(KPoly const& f);

/* Tag of a monic f over K with deg f <= n and M0(f) <= T (checked exactly). */
ClassTag classify_over_K(KPoly const& f, int n, Rational const& T);

/* Visits every monic f over K with 1 <= deg f <= n and M0(f) <= T, with its tag.
 * Enumerates the norms prim(N_{K/Q} f), which have M = M0(f)^[K:Q]. */
ClassTally classify_all_over_K(NumberField const& K, int n, Rational const& T, EnumConfig const& cfg,
                               std::function<void(KPoly const&, ClassTag)> const& visit = {});

struct Lemma61Check {
    long long Z_K = 0;
    long long cp_count = 0;   // distinct minimal polynomials over K of the counted numbers
    long long tally_cp = 0;   // cp tag count over the full M_K(n, X^n)
    bool ok = false;
};
Lemma61Check verify_lemma61(NumberField const& K, int n, Rational const& X, CensusConfig const& cfg = {});

/* For an ncp polynomial over K (deg K <= 3): f is the product of the K-conjugates of one
 * prime factor g1 over the splitting field, and its roots have degree < [K:Q] deg f. */
bool verify_ncp_structure(KPoly const& f);

/* Numbers beta with [K(beta):K] = n, primitive minimal polynomial over K, H(beta) <= X. */
long long count_relative(NumberField const& K, int n, Rational const& X, CensusConfig const& cfg = {});

struct BoundCheck {
    bool holds = false;
    Integer c;
    Rational bound;  // c X^(en(n+e))
    Rational margin; // bound - Z
};
BoundCheck verify_th4_bound(CensusReport const& r);

/* CSV with columns e,n,X,Z,Zbar,field_disc,Z_K,Zbar_K,cp,red,ncp,lower,not_primitive */
std::string census_csv(CensusReport const& r, bool header = true);

bool disc_order(Integer const& a, Integer const& b);

} // namespace hc

#endif
