// Finite cyclic covers L(p/d, q) -> L(p,q): Euler-class compatibility of
// lifted structures, the overtwisted-lift criteria, the sign-constraint
// systems obtained by pairing basic slices with their lifts, and the
// resulting pi1 / Euler-characteristic exclusion report for Stein fillings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lenscape/numbers.hpp"
#include "lenscape/tight.hpp"

namespace lenscape {

struct CoverDatum {
    LensSpace base;
    Int degree;
    std::optional<LensSpace> total; // nullopt = S^3 (degree p)
};

// one entry per divisor d of p with 1 < d <= p, ascending
std::vector<CoverDatum> covering_lattice(const LensSpace& l);

// tight structures v on the degree-d total space with
// d PD(v) = +- d PD(r) (mod p); universally tight candidates are dropped
// when r is virtually overtwisted (their lifts stay tight upstairs).
// d = 1 returns {r}; d = p is rejected (no rotation coordinates on S^3).
std::vector<RotationVector> euler_compatibility_filter(const LensSpace& base,
                                                       const RotationVector& r,
                                                       const Int& degree);

// q < p < d q
bool overtwisted_lift_basic(const LensSpace& base, const Int& degree);

struct RefinedLiftCriterion {
    Fraction expansion_route; // value of [a1,...,an - 1]
    Fraction intrinsic_route; // (p - q*)/((q*)^{-1} mod (p - q*)), q* = q^{-1} mod p
    bool routes_agree;
    bool overtwisted; // p' < d q', from the expansion route
};
RefinedLiftCriterion overtwisted_lift_refined(const LensSpace& base, const Int& degree);

enum class PairingStatus {
    Validated,    // lifted slice boundaries match cover slice boundaries exactly
    Heuristic,    // overlap grouping succeeded but boundaries misalign
    PairingFailed // slope wraparound or an uncovered cover slice: system unusable
};

struct SignTerm {
    Int coefficient;        // residue in (0, modulus)
    bool linked;            // grouped with cover slices (vs free base slice)
    std::string provenance;
};

struct SignConstraintSystem {
    Int modulus; // p of the total space
    std::vector<SignTerm> terms;
    PairingStatus status = PairingStatus::Validated;
    std::string note;
};

// builds sum_i s_i c_i = 0 (mod p') over sign choices s_i = +-1, one term per
// slice group (linked: base-minus-cover magnitude) or free base slice
SignConstraintSystem lift_sign_constraints(const LensSpace& base, const Int& degree);

enum class SignVerdict {
    OnlyConstantSigns,   // exactly the all-plus / all-minus assignments solve
    MixedSolutionExists, // some genuinely mixed assignment solves
    Inconsistent         // the all-plus assignment fails: pairing is wrong
};
struct SignSolution {
    SignVerdict verdict;
    std::vector<int> witness; // a mixed solution when one exists
};
SignSolution solve_sign_constraints(const SignConstraintSystem& sys);

struct DivisorRecord {
    Int degree;
    std::optional<LensSpace> total;
    bool basic_criterion = false;
    bool refined_criterion = false;
    bool ut_forcing = false; // total is all-twos or S^3: every tight lift is ut
    std::optional<bool> euler_filter_empty;
    std::optional<SignVerdict> sign_verdict; // recorded when pairing validated
    bool known_overtwisted = false;          // for a vo base: any criterion fired
    Fraction chi_bound;                      // (1 + length(total))/d, length(S^3) = 0
};

struct Pi1Report {
    LensSpace base;
    RotationVector rotation;
    bool base_is_ut = false;
    std::optional<Int> chi_exact; // 4 d3 + 3, available when r = 0
    bool chi_at_least_two = false;
    Fraction chi_min;             // best established lower bound for chi
    std::vector<DivisorRecord> divisors;
    std::vector<Int> excluded_orders;  // pi1 = Z/k ruled out
    std::vector<Int> surviving_orders; // divisors of p still possible (1 = trivial)
    std::string note;
};
Pi1Report pi1_chi_report(const LensSpace& base, const RotationVector& r);

} // namespace lenscape
