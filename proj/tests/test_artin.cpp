#include <doctest.h>

#include <random>

#include "lenscape/artin.hpp"
#include "lenscape/errors.hpp"

using namespace lenscape;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

ArtinPresentation trivial_presentation(int n) {
    ArtinPresentation p;
    p.n = n;
    p.relations.assign(static_cast<size_t>(n), Word{});
    return p;
}

bool same_presentation(const ArtinPresentation& a, const ArtinPresentation& b) {
    return a.n == b.n && a.relations == b.relations;
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(word_reduce({1, -1, 2}, 2) == Word{2});
    CHECK(word_reduce({1, 2, -2, -1}, 2) == Word{});
    CHECK(word_reduce({2, -1, 1, 1}, 2) == Word{2, 1});
    CHECK(word_reduce({1, 1, -1}, 2) == Word{1});
    Word w = word_reduce({1, 2, 1, -1, -2, 2}, 3);
    CHECK(word_reduce(w, 3) == w); // idempotent
    CHECK_THROWS_AS(word_reduce({3}, 2), invalid_input_error);
    CHECK_THROWS_AS(word_reduce({0}, 2), invalid_input_error);
    CHECK_THROWS_AS(word_reduce({1}, 0), invalid_input_error);
}

TEST_CASE("word algebra") {
    CHECK(word_inverse({1, 2, -1}) == Word{1, -2, -1});
    Word w{1, 2, -1, 2};
    CHECK(word_concat(w, word_inverse(w), 2) == Word{});
    CHECK(word_concat(word_inverse(w), w, 2) == Word{});
    CHECK(word_concat({1, 2}, {-2, 1}, 2) == Word{1, 1});

    CHECK(word_power({1, 2}, 0, 2) == Word{});
    CHECK(word_power({1, 2}, 2, 2) == Word{1, 2, 1, 2});
    CHECK(word_power({1, 2}, -1, 2) == Word{-2, -1});
    CHECK(word_power({1}, 5, 2) == Word{1, 1, 1, 1, 1});
}

TEST_CASE("presentation validity") {
    CHECK(artin_valid(trivial_presentation(3)));
    CHECK(artin_valid(pabc(1, 1, 0)));

    ArtinPresentation conj = pabc(1, 1, 1);
    CHECK(conj.relations[0] == Word{1, 1, 2});
    CHECK(conj.relations[1] == Word{2, 1, 2});
    CHECK(artin_valid(conj));

    // swapping a relation across generators breaks the product condition
    ArtinPresentation bad;
    bad.n = 2;
    bad.relations = {Word{2}, Word{}};
    CHECK(!artin_valid(bad));

    ArtinPresentation short_list;
    short_list.n = 2;
    short_list.relations = {Word{1}};
    CHECK_THROWS_AS(artin_valid(short_list), invalid_input_error);
}

TEST_CASE("boundary twist presentations") {
    ArtinPresentation t = boundary_twist_presentation(3, 2, 1);
    CHECK(t.n == 3);
    CHECK(t.relations == std::vector<Word>{{}, {2}, {}});
    CHECK(artin_valid(t));

    CHECK(same_presentation(boundary_twist_presentation(2, 1, 0), trivial_presentation(2)));

    ArtinPresentation neg = boundary_twist_presentation(2, 1, -3);
    CHECK(neg.relations[0] == Word{-1, -1, -1});
    CHECK(artin_valid(neg));

    CHECK_THROWS_AS(boundary_twist_presentation(2, 0, 1), invalid_input_error);
    CHECK_THROWS_AS(boundary_twist_presentation(2, 3, 1), invalid_input_error);
}

TEST_CASE("presentation product") {
    // powers around the same boundary compose additively
    ArtinPresentation sum = artin_product(boundary_twist_presentation(2, 1, 2),
                                          boundary_twist_presentation(2, 1, 3));
    CHECK(same_presentation(sum, boundary_twist_presentation(2, 1, 5)));

    // the trivial presentation is a two-sided identity
    ArtinPresentation q = pabc(2, 3, 1);
    CHECK(same_presentation(artin_product(trivial_presentation(2), q), q));
    CHECK(same_presentation(artin_product(q, trivial_presentation(2)), q));

    // the two-hole family is closed under the product, parameterwise
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int a2 = 0; a2 <= 1; ++a2)
                    for (int b2 = 0; b2 <= 1; ++b2)
                        for (int c2 = 0; c2 <= 1; ++c2) {
                            ArtinPresentation prod =
                                artin_product(pabc(a, b, c), pabc(a2, b2, c2));
                            CHECK(same_presentation(prod,
                                                    pabc(a + a2, b + b2, c + c2)));
                        }

    CHECK_THROWS_AS(artin_product(trivial_presentation(2), trivial_presentation(3)),
                    invalid_input_error);
    ArtinPresentation bad;
    bad.n = 2;
    bad.relations = {Word{2}, Word{}};
    CHECK_THROWS_AS(artin_product(bad, trivial_presentation(2)), invalid_input_error);
}

TEST_CASE("presentation product is associative") {
    std::mt19937 rng(414);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        ArtinPresentation p = pabc(coeff(rng), coeff(rng), coeff(rng));
        ArtinPresentation q = boundary_twist_presentation(2, 1 + static_cast<int>(rng() % 2),
                                                          coeff(rng));
        ArtinPresentation r = pabc(coeff(rng), coeff(rng), coeff(rng));
        ArtinPresentation left = artin_product(artin_product(p, q), r);
        ArtinPresentation right = artin_product(p, artin_product(q, r));
        CHECK(same_presentation(left, right));
        CHECK(artin_valid(left));
    }
}

TEST_CASE("exponent-sum matrices") {
    CHECK(relation_matrix(pabc(2, 3, 1)) == from_rows({{3, 1}, {1, 4}}));
    CHECK(relation_matrix(pabc(1, 1, -1)) == from_rows({{0, -1}, {-1, 0}}));
    CHECK(relation_matrix(trivial_presentation(3)) == IntMatrix(3, 3));

    IntMatrix t = relation_matrix(boundary_twist_presentation(3, 2, -4));
    IntMatrix expected(3, 3);
    expected.at(1, 1) = -4;
    CHECK(t == expected);

    // exponent sums are blind to conjugation, so the matrix adds under product
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        ArtinPresentation p = pabc(coeff(rng), coeff(rng), coeff(rng));
        ArtinPresentation q = pabc(coeff(rng), coeff(rng), coeff(rng));
        IntMatrix sum = relation_matrix(p);
        IntMatrix qm = relation_matrix(q);
        for (size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += qm.a[i];
        CHECK(relation_matrix(artin_product(p, q)) == sum);
    }

    // a presentation violating the product condition has no symmetric matrix
    ArtinPresentation bad;
    bad.n = 2;
    bad.relations = {Word{2}, Word{}};
    CHECK_THROWS_AS(relation_matrix(bad), inconsistency_error);
}

TEST_CASE("fillability screen") {
    CHECK(stein_fillable_screen(pabc(2, 3, 1)) == FillObstruction::PassesNecessary);
    CHECK(stein_fillable_screen(pabc(1, 1, -1)) == FillObstruction::FailsNecessary);
    CHECK(stein_fillable_screen(trivial_presentation(2)) == FillObstruction::PassesNecessary);
    CHECK(stein_fillable_screen(boundary_twist_presentation(2, 1, -1)) ==
          FillObstruction::FailsNecessary);

    ArtinPresentation bad;
    bad.n = 2;
    bad.relations = {Word{2}, Word{}};
    CHECK_THROWS_AS(stein_fillable_screen(bad), invalid_input_error);
}
