#include "lenscape/artin.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"
#include "lenscape/mcg.hpp"

namespace lenscape {

namespace {

void require_rank(int rank) {
    if (rank < 1) throw invalid_input_error("presentation rank must be >= 1");
}

void require_presentation(const ArtinPresentation& p) {
    require_rank(p.n);
    if (static_cast<int>(p.relations.size()) != p.n)
        throw invalid_input_error("presentation needs one relation per generator");
}

// x_i -> r_i^{-1} x_i r_i applied letterwise
Word substitute_conjugates(const Word& w, const ArtinPresentation& by) {
    Word out;
    for (int letter : w) {
        int i = std::abs(letter);
        const Word& r = by.relations[static_cast<size_t>(i - 1)];
        Word conj = word_concat(word_concat(word_inverse(r), Word{letter}, by.n), r, by.n);
        out = word_concat(out, conj, by.n);
    }
    return out;
}

} // namespace

Word word_reduce(const Word& w, int rank) {
    require_rank(rank);
    Word out;
    for (int letter : w) {
        if (letter == 0 || std::abs(letter) > rank)
            throw invalid_input_error("word letter out of range");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& letter : out) letter = -letter;
    return out;
}

Word word_concat(const Word& a, const Word& b, int rank) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return word_reduce(out, rank);
}

Word word_power(const Word& w, const Int& k, int rank) {
    StepBudget budget("word power");
    Word base = k < 0 ? word_inverse(w) : w;
    Int reps = k < 0 ? -k : k;
    Word out;
    for (Int i = 0; i < reps; ++i) {
        budget.charge(std::max<std::uint64_t>(1, base.size()));
        out = word_concat(out, base, rank);
    }
    return out;
}

bool artin_valid(const ArtinPresentation& p) {
    require_presentation(p);
    Word lhs, rhs;
    for (int i = 1; i <= p.n; ++i) {
        lhs = word_concat(lhs, Word{i}, p.n);
        const Word& r = p.relations[static_cast<size_t>(i - 1)];
        Word conj = word_concat(word_concat(word_inverse(r), Word{i}, p.n), r, p.n);
        rhs = word_concat(rhs, conj, p.n);
    }
    return lhs == rhs;
}

ArtinPresentation boundary_twist_presentation(int n, int i, const Int& k) {
    require_rank(n);
    if (i < 1 || i > n) throw invalid_input_error("generator index out of range");
    ArtinPresentation p;
    p.n = n;
    p.relations.assign(static_cast<size_t>(n), Word{});
    p.relations[static_cast<size_t>(i - 1)] = word_power(Word{i}, k, n);
    if (!artin_valid(p)) throw inconsistency_error("boundary twist presentation invalid");
    return p;
}

ArtinPresentation artin_product(const ArtinPresentation& p, const ArtinPresentation& q) {
    require_presentation(p);
    require_presentation(q);
    if (p.n != q.n) throw invalid_input_error("rank mismatch in presentation product");
    if (!artin_valid(p) || !artin_valid(q))
        throw invalid_input_error("product factors must be valid presentations");

    ArtinPresentation out;
    out.n = p.n;
    for (int j = 0; j < p.n; ++j) {
        Word substituted = substitute_conjugates(q.relations[static_cast<size_t>(j)], p);
        out.relations.push_back(
            word_concat(p.relations[static_cast<size_t>(j)], substituted, p.n));
    }
    if (!artin_valid(out))
        throw inconsistency_error("product of valid presentations failed validity");
    return out;
}

IntMatrix relation_matrix(const ArtinPresentation& p) {
    require_presentation(p);
    IntMatrix a(p.n, p.n);
    for (int j = 0; j < p.n; ++j)
        for (int letter : p.relations[static_cast<size_t>(j)]) {
            int i = std::abs(letter) - 1;
            a.at(i, j) += letter > 0 ? 1 : -1;
        }
    if (!a.is_symmetric())
        throw inconsistency_error("relation matrix is not symmetric");
    return a;
}

ArtinPresentation pabc(const Int& a, const Int& b, const Int& c) {
    ArtinPresentation p;
    p.n = 2;
    Word x1x2{1, 2};
    Word common = word_power(x1x2, c, 2);
    p.relations.push_back(word_concat(word_power(Word{1}, a, 2), common, 2));
    p.relations.push_back(word_concat(word_power(Word{2}, b, 2), common, 2));
    if (!artin_valid(p)) throw inconsistency_error("p_{a,b,c} failed validity");
    return p;
}

FillObstruction stein_fillable_screen(const ArtinPresentation& p) {
    if (!artin_valid(p)) throw invalid_input_error("screen needs a valid presentation");
    return quasipositivity_screen(relation_matrix(p)) ? FillObstruction::PassesNecessary
                                                      : FillObstruction::FailsNecessary;
}

} // namespace lenscape
