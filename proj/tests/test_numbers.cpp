#include <doctest.h>

#include <random>

#include "lenscape/errors.hpp"
#include "lenscape/numbers.hpp"

using namespace lenscape;

namespace {

std::vector<Int> random_chain(std::mt19937& rng, int max_len = 8) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> coeff(2, 9);
    std::vector<Int> cf(static_cast<size_t>(len(rng)));
    for (Int& a : cf) a = coeff(rng);
    return cf;
}

LensSpace random_lens(std::mt19937& rng) {
    Fraction f = cf_evaluate(random_chain(rng));
    return normalize_lens(f.num, f.den);
}

} // namespace

TEST_CASE("negative continued fraction expansion goldens") {
    CHECK(neg_cf_expand(11, 4) == std::vector<Int>{3, 4});
    CHECK(neg_cf_expand(17, 7) == std::vector<Int>{3, 2, 4});
    CHECK(neg_cf_expand(52, 11) == std::vector<Int>{5, 4, 3});
    CHECK(neg_cf_expand(13, 11) == std::vector<Int>{2, 2, 2, 2, 2, 3});
    CHECK(neg_cf_expand(4, 3) == std::vector<Int>{2, 2, 2});
    // q = p-1 gives the all-twos chain of length p-1
    for (int p = 2; p <= 9; ++p) {
        auto cf = neg_cf_expand(p, p - 1);
        CHECK(cf.size() == static_cast<size_t>(p - 1));
        for (const Int& a : cf) CHECK(a == 2);
    }
}

TEST_CASE("cf_evaluate goldens and validation") {
    CHECK(cf_evaluate({3, 4}) == Fraction(11, 4));
    CHECK(cf_evaluate({5, 4, 3}) == Fraction(52, 11));
    CHECK(cf_evaluate({2}) == Fraction(2, 1));
    // tolerated decayed coefficient (used by the truncated-chain route)
    CHECK(cf_evaluate({5, 6}) == Fraction(29, 6));
    CHECK(cf_evaluate({3, 1}) == Fraction(2, 1));
    CHECK_THROWS_AS(cf_evaluate({}), invalid_input_error);
    CHECK_THROWS_AS(cf_evaluate({3, 0}), invalid_input_error);
    CHECK_THROWS_AS(cf_evaluate({-2, 3}), invalid_input_error);
}

TEST_CASE("expansion round trip on random chains") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        auto cf = random_chain(rng);
        Fraction v = cf_evaluate(cf);
        CHECK(v.num > v.den);
        CHECK(v.den > 0);
        CHECK(neg_cf_expand(v.num, v.den) == cf);
    }
}

TEST_CASE("riemenschneider dual goldens") {
    CHECK(riemenschneider_dual(normalize_lens(11, 4)) == std::vector<Int>{2, 3, 2, 2});
    CHECK(cf_evaluate({2, 3, 2, 2}) == Fraction(11, 7));
    CHECK(riemenschneider_dual(normalize_lens(17, 7)) == std::vector<Int>{2, 4, 2, 2});
    CHECK(riemenschneider_dual(normalize_lens(4, 3)) == std::vector<Int>{4});
}

TEST_CASE("dual is an involution and satisfies the length identity") {
    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        LensSpace l = random_lens(rng);
        auto cf = neg_cf_expand(l);
        auto dual = riemenschneider_dual(l);
        // dual of the dual comes back
        LensSpace ld = normalize_lens(l.p, l.p - l.q);
        CHECK(riemenschneider_dual(ld) == cf);
        // l + l^dual = 1 + sum(a_i - 1)
        Int rhs = 1;
        for (const Int& a : cf) rhs += a - 1;
        CHECK(Int(cf.size()) + Int(dual.size()) == rhs);
    }
}

TEST_CASE("dots layout agrees with the arithmetic dual") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 60; ++i) {
        auto cf = neg_cf_expand(random_lens(rng));
        CHECK(dual_from_dots(cf) == riemenschneider_dual(normalize_lens(cf_evaluate(cf).num,
                                                                        cf_evaluate(cf).den)));
    }
    // the rendered diagram has one row per coefficient
    auto layout = riemenschneider_dots({3, 2, 4});
    CHECK(layout.rows.size() == 3);
    CHECK(!render_dots(layout).empty());
}

TEST_CASE("mod_inverse and mod_nonneg") {
    CHECK(mod_inverse(7, 34) == 5);
    CHECK(mod_inverse(1, 97) == 1);
    CHECK(mod_inverse(11, 52) == 19);
    CHECK_THROWS_AS(mod_inverse(4, 6), invalid_input_error);
    CHECK(mod_nonneg(-22, 34) == 12);
    CHECK(mod_nonneg(-9, 17) == 8);
    CHECK(mod_nonneg(35, 17) == 1);
}

TEST_CASE("normalize_lens and same_lens_space") {
    LensSpace l = normalize_lens(34, 41); // q reduced mod p
    CHECK(l.p == 34);
    CHECK(l.q == 7);
    LensSpace twice = normalize_lens(l);
    CHECK(twice.p == l.p);
    CHECK(twice.q == l.q);
    CHECK_THROWS_AS(normalize_lens(1, 1), invalid_input_error);
    CHECK_THROWS_AS(normalize_lens(6, 3), invalid_input_error);

    // q' = q or qq' = 1 (mod p)
    CHECK(same_lens_space(normalize_lens(7, 2), normalize_lens(7, 4)));
    CHECK(!same_lens_space(normalize_lens(7, 2), normalize_lens(7, 3)));
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        LensSpace a = random_lens(rng);
        CHECK(same_lens_space(a, a));
        LensSpace b = normalize_lens(a.p, mod_inverse(a.q, a.p));
        CHECK(same_lens_space(a, b));
        CHECK(same_lens_space(b, a));
    }
}

TEST_CASE("fraction arithmetic stays reduced") {
    Fraction f(6, -4);
    CHECK(f.num == -3);
    CHECK(f.den == 2);
    CHECK(f.str() == "-3/2");
    CHECK(Fraction(11, 4).reciprocal() == Fraction(4, 11));
    CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
    CHECK(Fraction(1, 2) - Fraction(1, 2) == Fraction(0, 1));
    CHECK(Fraction(2, 3) * Fraction(9, 4) == Fraction(3, 2));
    CHECK(Fraction(1, 2) / Fraction(3, 4) == Fraction(2, 3));
    CHECK(Fraction(-1, 3) < Fraction(1, 7));
    CHECK(Fraction(5).is_integer());
    CHECK(Fraction(5).str() == "5/1");
    CHECK_THROWS_AS(Fraction(1, 0), invalid_input_error);
    CHECK_THROWS_AS(Fraction(0, 1).reciprocal(), invalid_input_error);
}

TEST_CASE("cf_length_of matches the expansion length") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 50; ++i) {
        LensSpace l = random_lens(rng);
        CHECK(cf_length_of(l.p, l.q) == Int(neg_cf_expand(l).size()));
    }
}
