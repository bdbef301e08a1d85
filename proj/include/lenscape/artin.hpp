// Free-group word algebra for planar open-book presentations: the condition
// prod x_i = prod r_i^{-1} x_i r_i, boundary-twist generators, the
// presentation product, exponent-sum matrices, and the two-hole family
// p_{a,b,c}.
#pragma once

#include <vector>

#include "lenscape/lattice.hpp"
#include "lenscape/numbers.hpp"

namespace lenscape {

// signed 1-based generator indices: +i = x_i, -i = x_i^{-1}
using Word = std::vector<int>;

// free reduction; validates letters against the rank
Word word_reduce(const Word& w, int rank);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b, int rank);
Word word_power(const Word& w, const Int& k, int rank);

struct ArtinPresentation {
    int n = 0;
    std::vector<Word> relations; // stored reduced
};

// prod x_i = prod r_i^{-1} x_i r_i after reduction
bool artin_valid(const ArtinPresentation& p);

// all relations trivial except r_i = x_i^k
ArtinPresentation boundary_twist_presentation(int n, int i, const Int& k);

// substitute x_i -> r_i^{-1} x_i r_i inside the second factor's relations,
// then prefix with the first factor's: (p.q)_j = r_j R~_j
ArtinPresentation artin_product(const ArtinPresentation& p, const ArtinPresentation& q);

// A[i][j] = exponent sum of x_i in r_j; asserted symmetric
IntMatrix relation_matrix(const ArtinPresentation& p);

// r1 = x1^a (x1 x2)^c, r2 = x2^b (x1 x2)^c; exponent-sum matrix
// [[a+c, c], [c, b+c]]
ArtinPresentation pabc(const Int& a, const Int& b, const Int& c);

enum class FillObstruction { FailsNecessary, PassesNecessary };

// quasipositivity screen on the relation matrix: a necessary condition for
// Stein fillability, never a certificate
FillObstruction stein_fillable_screen(const ArtinPresentation& p);

} // namespace lenscape
