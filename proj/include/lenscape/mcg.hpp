// Homology-level bookkeeping for Dehn-twist factorizations on a disc with
// holes: multiplicity matrices, lantern rewrites, enumeration of curve
// configurations realizing a target matrix, and Euler-characteristic /
// homology data of the fibration a positive factorization defines.
#pragma once

#include <string>
#include <vector>

#include "lenscape/lattice.hpp"
#include "lenscape/numbers.hpp"

namespace lenscape {

using HoleSet = std::vector<int>;           // sorted, distinct, nonempty
using Configuration = std::vector<HoleSet>; // multiset, kept sorted

struct Twist {
    HoleSet holes;
    Int power; // nonzero; negative allowed (left twists)
};

struct TwistFactorization {
    int num_holes = 0;
    std::vector<std::string> hole_names; // optional; size num_holes when present
    std::vector<Twist> twists;
};

// m(i,j) = sum of powers over twists whose hole-set contains both i and j
IntMatrix multiplicity_matrix(const TwistFactorization& f);

// unit-power multiplicity matrix of a bare curve multiset
IntMatrix configuration_matrix(const Configuration& curves, int num_holes);

// removes one copy each of s1, s2, s3 (pairwise disjoint) and their union,
// inserts s1|s2, s1|s3, s2|s3; the multiplicity matrix is unchanged and the
// curve count drops by one
Configuration lantern_rewrite(const Configuration& curves, const HoleSet& s1,
                              const HoleSet& s2, const HoleSet& s3);

// all multisets of nonempty hole-sets whose unit-power multiplicity matrix
// equals target, deduplicated up to permuting holes within each declared
// interchangeable group; canonical representatives, sorted
std::vector<Configuration> enumerate_configurations(
    const IntMatrix& target, int max_curves,
    const std::vector<std::vector<int>>& interchangeable = {});

struct PalfInvariants {
    Int chi;
    Int b2;
    std::vector<Int> h1_torsion; // invariant factors > 1
    Int h1_rank = 0;             // free rank of H1
};
// handle calculus of the fibration: one 1-handle per hole, one 2-handle per
// twist copy attached along the sum of the holes it encloses; requires all
// powers positive
PalfInvariants palf_euler(const TwistFactorization& f);

// all entries >= 0 and every diagonal entry is a maximum of its row
bool quasipositivity_screen(const IntMatrix& m);

// the chain monodromy for p/q = [a1, a2]: twists around all holes, around
// {s} u P, around {s} u N, and around each single hole; holes are ordered
// s, p_1..p_k, n_1..n_l with k = a1 - 2, l = a2 - 2
TwistFactorization chain_factorization(const Int& a1, const Int& a2);

} // namespace lenscape
