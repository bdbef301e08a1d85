#include "lenscape/numbers.hpp"

#include <sstream>

#include "lenscape/errors.hpp"

namespace lenscape {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Int mod_nonneg(const Int& a, const Int& m) {
    if (m <= 0) throw invalid_input_error("modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 0) throw invalid_input_error("modulus must be positive");
    // extended euclid on (a mod m, m)
    Int r0 = mod_nonneg(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int k = r0 / r1;
        Int r2 = r0 - k * r1;
        Int s2 = s0 - k * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw invalid_input_error("mod_inverse: arguments are not coprime");
    return mod_nonneg(s0, m);
}

Fraction::Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw invalid_input_error("fraction with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd(abs(num), den);
    if (g > 1) { num /= g; den /= g; }
}

Fraction Fraction::reciprocal() const {
    if (num == 0) throw invalid_input_error("reciprocal of zero");
    return {den, num};
}

std::string Fraction::str() const {
    std::ostringstream os;
    os << num << "/" << den;
    return os.str();
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Fraction operator*(const Fraction& a, const Fraction& b) {
    return {a.num * b.num, a.den * b.den};
}
Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num == 0) throw invalid_input_error("division by zero fraction");
    return {a.num * b.den, a.den * b.num};
}

LensSpace normalize_lens(const Int& p, const Int& q) {
    if (p < 2) throw invalid_input_error("lens space requires p >= 2");
    Int qr = mod_nonneg(q, p);
    if (qr == 0) throw invalid_input_error("lens space requires q not divisible by p");
    if (gcd(p, qr) != 1) throw invalid_input_error("lens space requires gcd(p, q) = 1");
    return {p, qr};
}

bool same_lens_space(const LensSpace& a, const LensSpace& b) {
    if (a.p != b.p) return false;
    if (a.q == b.q) return true;
    return mod_nonneg(a.q * b.q, a.p) == 1;
}

std::vector<Int> neg_cf_expand(const Int& p, const Int& q) {
    LensSpace l = (p >= 2 && 0 < q && q < p && gcd(p, q) == 1) ? LensSpace{p, q}
                                                               : normalize_lens(p, q);
    std::vector<Int> out;
    Int a = l.p, b = l.q;
    while (b > 0) {
        Int c = (a + b - 1) / b; // ceil(a/b), both positive
        out.push_back(c);
        Int nb = c * b - a; // a/b = c - 1/(b/(cb - a))
        a = b;
        b = nb;
    }
    return out;
}

Fraction cf_evaluate(const std::vector<Int>& coeffs) {
    if (coeffs.empty()) throw invalid_input_error("empty continued fraction");
    Fraction v(coeffs.back());
    if (v.num < 1) throw invalid_input_error("continued fraction coefficient below 1");
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        if (coeffs[i] < 1) throw invalid_input_error("continued fraction coefficient below 1");
        // tails stay >= 1 whenever all coefficients are >= 1, so no div by zero
        v = Fraction(coeffs[i]) - v.reciprocal();
    }
    return v;
}

std::vector<Int> riemenschneider_dual(const LensSpace& l) {
    return neg_cf_expand(l.p, l.p - l.q);
}

DotsLayout riemenschneider_dots(const std::vector<Int>& cf) {
    if (cf.empty()) throw invalid_input_error("empty continued fraction");
    for (const Int& a : cf)
        if (a < 2) throw invalid_input_error("dots layout needs canonical coefficients >= 2");
    DotsLayout out;
    Int col = 0;
    for (size_t i = 0; i < cf.size(); ++i) {
        Int count = cf[i] - 1;
        out.rows.emplace_back(col, count);
        col += count - 1; // next row starts under the last dot of this one
    }
    Int total_cols = col + 1;
    out.column_counts.assign(static_cast<size_t>(total_cols), Int(0));
    for (const auto& [start, count] : out.rows)
        for (Int j = 0; j < count; ++j)
            out.column_counts[static_cast<size_t>(start + j)] += 1;
    return out;
}

std::vector<Int> dual_from_dots(const std::vector<Int>& cf) {
    DotsLayout layout = riemenschneider_dots(cf);
    std::vector<Int> dual;
    dual.reserve(layout.column_counts.size());
    for (const Int& c : layout.column_counts) dual.push_back(c + 1);
    return dual;
}

std::string render_dots(const DotsLayout& layout) {
    std::ostringstream os;
    for (const auto& [start, count] : layout.rows) {
        for (Int j = 0; j < start; ++j) os << "  ";
        for (Int j = 0; j < count; ++j) os << "* ";
        os << "\n";
    }
    return os.str();
}

Int cf_length_of(const Int& p, const Int& q) {
    return Int(neg_cf_expand(p, q).size());
}

} // namespace lenscape
