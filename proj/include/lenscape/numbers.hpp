// Exact arithmetic layer: arbitrary-precision integers, reduced fractions,
// normalized lens-space parameters, and negative continued fractions
// p/q = [a1,...,an] = a1 - 1/(a2 - 1/(...)), all ai >= 2.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lenscape {

using Int = boost::multiprecision::cpp_int;

Int mod_nonneg(const Int& a, const Int& m); // representative in [0, m)
Int mod_inverse(const Int& a, const Int& m); // in [1, m), throws if gcd(a,m) != 1

// reduced fraction, den > 0 always
struct Fraction {
    Int num{0};
    Int den{1};

    Fraction() = default;
    Fraction(Int n) : num(std::move(n)) {} // NOLINT: implicit by design
    Fraction(Int n, Int d);

    bool is_integer() const { return den == 1; }
    Fraction reciprocal() const;
    std::string str() const; // "num/den", always with denominator

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction operator-() const { return {-num, den}; }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }
};

// L(p,q), stored normalized: p >= 2, 0 < q < p, gcd(p,q) = 1
struct LensSpace {
    Int p;
    Int q;
};

LensSpace normalize_lens(const Int& p, const Int& q);
inline LensSpace normalize_lens(const LensSpace& l) { return normalize_lens(l.p, l.q); }

// true iff L(p,q) ~ L(p,q'): same p and q' = q or qq' = 1 (mod p)
bool same_lens_space(const LensSpace& a, const LensSpace& b);

// canonical expansion of p/q > 1, every coefficient >= 2
std::vector<Int> neg_cf_expand(const Int& p, const Int& q);
inline std::vector<Int> neg_cf_expand(const LensSpace& l) { return neg_cf_expand(l.p, l.q); }

// value of [c1,...,ck]; tolerates a trailing run of coefficients that have
// decayed to 1 (never divides by zero: every tail evaluates >= 1)
Fraction cf_evaluate(const std::vector<Int>& coeffs);

// expansion of p/(p-q); dual length ldual = 1 + sum(ai - 1) - l
std::vector<Int> riemenschneider_dual(const LensSpace& l);

// point diagram for the duality: row i carries ai - 1 dots, consecutive rows
// overlap in exactly one column; column j of the diagram has cj - 1 dots where
// [c1,...,cm] is the dual expansion. Kept as an explanatory renderer and as an
// independent oracle for riemenschneider_dual.
struct DotsLayout {
    // per row: (first column, dot count), columns 0-based
    std::vector<std::pair<Int, Int>> rows;
    std::vector<Int> column_counts;
};
DotsLayout riemenschneider_dots(const std::vector<Int>& cf);
std::vector<Int> dual_from_dots(const std::vector<Int>& cf);
std::string render_dots(const DotsLayout& layout);

Int cf_length_of(const Int& p, const Int& q); // length of neg_cf_expand(p,q)

} // namespace lenscape
