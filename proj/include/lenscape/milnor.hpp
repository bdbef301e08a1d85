// Obstructions to bounding a Milnor fibre: integer isometry groups of the
// positive tridiagonal forms attached to even expansions, the trace-(-1)
// monodromy filter, and the case-by-case verdict for virtually overtwisted
// structures.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscape/lattice.hpp"
#include "lenscape/numbers.hpp"
#include "lenscape/tight.hpp"

namespace lenscape {

// diag(a_1..a_n), -1 off the diagonal; requires every a_i even and >= 2
IntMatrix milnor_form(const std::vector<Int>& cf);

struct IsometryGroupResult {
    std::vector<IntMatrix> elements; // A with A M A^T = M, |det A| = 1
    bool complete = false;
};

// exhaustive enumeration of A with A M A^T = M (M positive definite);
// group axioms are verified on the result before returning
IsometryGroupResult isometry_search(const IntMatrix& m);

IntMatrix reversal_matrix(int n);

// {+-I} when the diagonal is not palindromic, {+-I, +-rho} when it is;
// applies only when every diagonal entry is >= 4 (else nullopt)
std::optional<IsometryGroupResult> gerstein_fast_path(const std::vector<Int>& diagonal);

// true iff some element has trace -1 (a monodromy candidate survives)
bool acampo_filter(const IsometryGroupResult& g);

// (expansion is palindromic, q^2 = 1 mod p); asserts the two agree;
// requires every expansion coefficient even
std::pair<bool, bool> palindrome_iff_q2(const LensSpace& l);

enum class MilnorVerdict { Obstructed, Inconclusive, NotApplicable };

struct MilnorReport {
    MilnorVerdict verdict;
    std::string case_tag; // "a", "b", "c-i", "c-ii", "c1", or ""
    std::string reason;
    bool certified = false; // an exhaustive isometry search backed the verdict
};
MilnorReport milnor_verdict(const LensSpace& l, const RotationVector& r);

struct UniqueFillingNote {
    bool unique_filling_hypothesis = false;     // r = 0
    bool isolated_singularity_eligible = false; // q = p - 1
};
UniqueFillingNote unique_filling_note(const LensSpace& l, const RotationVector& r);

} // namespace lenscape
