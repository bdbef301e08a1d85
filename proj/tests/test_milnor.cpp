#include <doctest.h>

#include <algorithm>
#include <set>

#include "lenscape/errors.hpp"
#include "lenscape/milnor.hpp"

using namespace lenscape;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

std::set<std::vector<Int>> element_set(const IsometryGroupResult& g) {
    std::set<std::vector<Int>> out;
    for (const IntMatrix& m : g.elements) out.insert(m.a);
    return out;
}

} // namespace

TEST_CASE("tridiagonal milnor form") {
    CHECK(milnor_form({4, 6}) == from_rows({{4, -1}, {-1, 6}}));
    CHECK(milnor_form({2, 4, 2}) == from_rows({{2, -1, 0}, {-1, 4, -1}, {0, -1, 2}}));
    CHECK_THROWS_AS(milnor_form({3, 4}), invalid_input_error); // odd entry
}

TEST_CASE("isometry groups of small forms") {
    IsometryGroupResult sym = isometry_search(from_rows({{4, -1}, {-1, 4}}));
    CHECK(sym.complete);
    CHECK(sym.elements.size() == 4); // {+-I, +-rho}
    CHECK(element_set(sym).count({0, 1, 1, 0}) == 1);

    IsometryGroupResult asym = isometry_search(from_rows({{4, -1}, {-1, 6}}));
    CHECK(asym.elements.size() == 2); // {+-I}

    IsometryGroupResult hex = isometry_search(from_rows({{2, -1}, {-1, 2}}));
    CHECK(hex.elements.size() == 12); // hexagonal lattice
    CHECK(element_set(hex).count({0, 1, -1, -1}) == 1);
}

TEST_CASE("isometry search output is a group") {
    for (const auto& diag : {std::vector<Int>{4, 6}, {4, 4}, {2, 4}, {4, 6, 4}}) {
        IntMatrix m = milnor_form(diag);
        IsometryGroupResult g = isometry_search(m);
        REQUIRE(g.complete);
        std::set<std::vector<Int>> set = element_set(g);
        CHECK(set.count(IntMatrix::identity(m.rows).a) == 1);
        for (const IntMatrix& a : g.elements) {
            // isometry property and unimodularity
            CHECK(mat_mul(mat_mul(a, m), a.transposed()) == m);
            CHECK(abs(determinant(a)) == 1);
            // closure under multiplication
            for (const IntMatrix& b : g.elements) CHECK(set.count(mat_mul(a, b).a) == 1);
        }
    }
}

TEST_CASE("gerstein fast path") {
    auto pal = gerstein_fast_path({4, 6, 4});
    REQUIRE(pal.has_value());
    CHECK(pal->elements.size() == 4);
    auto gen = gerstein_fast_path({4, 4, 6});
    REQUIRE(gen.has_value());
    CHECK(gen->elements.size() == 2);
    CHECK(!gerstein_fast_path({2, 4, 2}).has_value()); // 2 on the diagonal

    // agreement with the exhaustive search on applicable instances
    for (Int x1 = 2; x1 <= 4; ++x1)
        for (Int x2 = 2; x2 <= 4; ++x2)
            for (Int x3 = 2; x3 <= 4; ++x3) {
                std::vector<Int> diag{2 * x1, 2 * x2, 2 * x3};
                auto fast = gerstein_fast_path(diag);
                REQUIRE(fast.has_value());
                CHECK(element_set(*fast) == element_set(isometry_search(milnor_form(diag))));
            }
}

TEST_CASE("reversal matrix") {
    IntMatrix rho = reversal_matrix(3);
    CHECK(rho == from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(mat_mul(rho, rho) == IntMatrix::identity(3));
}

TEST_CASE("trace filter") {
    // even-length palindrome: traces are {n, -n, 0, 0}
    CHECK(!acampo_filter(isometry_search(milnor_form({4, 6, 6, 4}))));
    // odd-length palindrome: -rho has trace -1
    CHECK(acampo_filter(isometry_search(milnor_form({4, 6, 4}))));
    // hexagonal form has an order-3 element of trace -1
    CHECK(acampo_filter(isometry_search(from_rows({{2, -1}, {-1, 2}}))));
    CHECK(!acampo_filter(isometry_search(milnor_form({4, 6}))));
}

TEST_CASE("palindromes match q^2 = 1") {
    auto p1 = palindrome_iff_q2(normalize_lens(88, 23)); // [4,6,4]
    CHECK(p1.first);
    CHECK(p1.second);
    auto p2 = palindrome_iff_q2(normalize_lens(86, 23)); // [4,4,6]
    CHECK(!p2.first);
    CHECK(!p2.second);
    auto p3 = palindrome_iff_q2(normalize_lens(12, 7)); // [2,4,2]
    CHECK(p3.first);
    CHECK(p3.second);
    CHECK_THROWS_AS(palindrome_iff_q2(normalize_lens(11, 4)), invalid_input_error);

    // exhaustive over small p: even-coefficient expansions only
    for (int p = 2; p <= 120; ++p)
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            auto cf = neg_cf_expand(p, q);
            bool even = std::all_of(cf.begin(), cf.end(), [](const Int& a) { return a % 2 == 0; });
            if (!even) continue;
            auto pair = palindrome_iff_q2(normalize_lens(p, q));
            CHECK(pair.first == pair.second);
            CHECK(pair.second == (mod_nonneg(Int(q) * q, p) == 1 % p));
        }
}

TEST_CASE("milnor verdict case analysis") {
    MilnorReport a = milnor_verdict(normalize_lens(11, 4), {1, -2});
    CHECK(a.verdict == MilnorVerdict::Obstructed);
    CHECK(a.case_tag == "a");

    MilnorReport b = milnor_verdict(normalize_lens(23, 6), {0, 0}); // [4,6]
    CHECK(b.verdict == MilnorVerdict::Obstructed);
    CHECK(b.case_tag == "b");
    CHECK(b.certified);

    MilnorReport ci = milnor_verdict(normalize_lens(86, 23), {0, 0, 0}); // [4,4,6]
    CHECK(ci.verdict == MilnorVerdict::Obstructed);
    CHECK(ci.case_tag == "c-i");

    // odd-length palindrome stays open
    MilnorReport open3 = milnor_verdict(normalize_lens(88, 23), {0, 0, 0}); // [4,6,4]
    CHECK(open3.verdict == MilnorVerdict::Inconclusive);

    MilnorReport cii = milnor_verdict(normalize_lens(513, 134), {0, 0, 0, 0}); // [4,6,6,4]
    CHECK(cii.verdict == MilnorVerdict::Obstructed);
    CHECK(cii.case_tag == "c-ii");

    MilnorReport twos = milnor_verdict(normalize_lens(12, 7), {0, 0, 0}); // [2,4,2]
    CHECK(twos.verdict == MilnorVerdict::Inconclusive);

    // single-coefficient family is realized, not obstructed
    MilnorReport single = milnor_verdict(normalize_lens(4, 1), {0});
    CHECK(single.verdict == MilnorVerdict::Inconclusive);
    CHECK(single.case_tag.empty());

    // nonzero rotation obstructs through the euler class
    MilnorReport c1 = milnor_verdict(normalize_lens(23, 6), {2, 0});
    CHECK(c1.verdict == MilnorVerdict::Obstructed);
    CHECK(c1.case_tag == "c1");

    // universally tight input is outside the question
    MilnorReport ut = milnor_verdict(normalize_lens(11, 4), {1, 2});
    CHECK(ut.verdict == MilnorVerdict::NotApplicable);
}

TEST_CASE("filling uniqueness notes") {
    UniqueFillingNote zero = unique_filling_note(normalize_lens(23, 6), {0, 0});
    CHECK(zero.unique_filling_hypothesis);
    CHECK(!zero.isolated_singularity_eligible);
    UniqueFillingNote boundary = unique_filling_note(normalize_lens(6, 5), {0, 0, 0, 0, 0});
    CHECK(boundary.isolated_singularity_eligible);
    UniqueFillingNote nonzero = unique_filling_note(normalize_lens(11, 4), {1, 0});
    CHECK(!nonzero.unique_filling_hypothesis);
}
