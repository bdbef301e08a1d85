// Homotopy invariants of the chain structures: Poincare dual of the Euler
// class in meridian coordinates, exact c1^2 = r^T Q^{-1} r, the d3 invariant
// of the chain filling, and the rational-homology-ball obstructions.
#pragma once

#include <optional>
#include <vector>

#include "lenscape/lattice.hpp"
#include "lenscape/numbers.hpp"

namespace lenscape {

// mu_1 = 1, mu_2 = a_1, mu_i = a_{i-1} mu_{i-1} - mu_{i-2}; strictly
// increasing, mu_i = (-1)^{i-1} D_{i-1} against the determinant recursion
std::vector<Int> meridian_coords(const std::vector<Int>& cf);

struct PdEulerClass {
    Int unreduced; // sum r_i mu_i, lies in (-p, p)
    Int reduced;   // representative in [0, p)
};
PdEulerClass pd_euler_class(const std::vector<Int>& cf, const std::vector<Int>& r);

// sum r_i mu_i = 0 iff r = 0
bool c1_is_zero(const std::vector<Int>& cf, const std::vector<Int>& r);

// x^T Q^{-1} x for any invertible symmetric Q (exact)
Fraction c1_squared(const IntMatrix& q, const std::vector<Int>& x);
Fraction c1_squared_chain(const std::vector<Int>& cf, const std::vector<Int>& r);

// d3 = (c1^2 - 3 sigma - 2 chi)/4 for a 4-manifold with b1 = 0 bounding;
// general form takes (sigma, chi) explicitly, the chain form fills in
// sigma = -n, chi = 1 + n; r is dimension-checked only (arithmetic probes
// with invalid parity are allowed, cf. rational_ball_obstruction)
Fraction d3_invariant(const IntMatrix& q, const std::vector<Int>& x, const Int& sigma, const Int& chi);
Fraction d3_chain(const std::vector<Int>& cf, const std::vector<Int>& r);

// when every filling has c1 = 0: chi(X) = 4 d3 + 3 if that is a positive
// integer, otherwise no filling-independent value exists
std::optional<Int> chi_from_d3(const Fraction& d3);

enum class BallVerdict { Obstructed, Possible };
struct RationalBallReport {
    BallVerdict verdict;
    Fraction f_r;      // r^T Q^{-1} r
    Fraction f_y;      // y^T Q^{-1} y at the extremal vector y = (a_i - 2)
    Fraction d3;       // of the chain filling
    bool concavity_fired; // f_r > f_y (strict)
    bool d3_fired;        // d3 != -1/2
};
// r is dimension-checked only: the all-zero probe is legitimate even on
// chains whose parity excludes it as a rotation vector
RationalBallReport rational_ball_obstruction(const std::vector<Int>& cf, const std::vector<Int>& r);

// exhaustively verifies that f(x) = x^T Q^{-1} x over valid rotation vectors
// is minimized exactly on {y, -y}
bool verify_concavity(const std::vector<Int>& cf);

} // namespace lenscape
