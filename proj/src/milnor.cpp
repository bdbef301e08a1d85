#include "lenscape/milnor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"

namespace lenscape {

namespace {

Int trace_of(const IntMatrix& a) {
    Int t = 0;
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

// rows i..n-1 of a are still unset; check Gram conditions of row i against rows < i
bool gram_ok(const IntMatrix& a, const IntMatrix& m, int i, const std::vector<Int>& row) {
    int n = m.rows;
    for (int j = 0; j < i; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) s += row[static_cast<size_t>(k)] * m.at(k, l) * a.at(j, l);
        if (s != m.at(i, j)) return false;
    }
    return true;
}

void verify_group(const IsometryGroupResult& g, const IntMatrix& m) {
    int n = m.rows;
    std::set<IntMatrix> members(g.elements.begin(), g.elements.end());
    if (!members.count(IntMatrix::identity(n)))
        throw inconsistency_error("isometry set misses the identity");
    IntMatrix neg = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) neg.at(i, i) = -1;
    if (!members.count(neg)) throw inconsistency_error("isometry set misses -identity");
    for (const IntMatrix& a : g.elements) {
        Int d = determinant(a);
        if (d != 1 && d != -1) throw inconsistency_error("isometry with |det| != 1");
    }
    // closure under product (and hence inverse, the set being finite)
    if (g.elements.size() <= 400) {
        for (const IntMatrix& a : g.elements)
            for (const IntMatrix& b : g.elements)
                if (!members.count(mat_mul(a, b)))
                    throw inconsistency_error("isometry set not closed under product");
    }
}

} // namespace

IntMatrix milnor_form(const std::vector<Int>& cf) {
    if (cf.empty()) throw invalid_input_error("empty expansion");
    int n = static_cast<int>(cf.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const Int& a = cf[static_cast<size_t>(i)];
        if (a < 2 || a % 2 != 0)
            throw invalid_input_error("tridiagonal form needs even coefficients >= 2");
        m.at(i, i) = a;
        if (i + 1 < n) {
            m.at(i, i + 1) = -1;
            m.at(i + 1, i) = -1;
        }
    }
    return m;
}

IsometryGroupResult isometry_search(const IntMatrix& m) {
    if (m.rows != m.cols || !m.is_symmetric())
        throw invalid_input_error("isometry search needs a symmetric matrix");
    int n = m.rows;
    const auto& limits = search_limits();
    if (limits.gates_enabled && n > 6)
        throw resource_limit_error("isometry search capped at rank 6 "
                                   "(set LENSCAPE_MAX_SEARCH to lift)");
    if (!is_positive_definite(m))
        throw invalid_input_error("isometry search needs a positive definite form");

    Int max_diag = 0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, m.at(i, i));

    // candidate rows, both signs of each representative, grouped by norm
    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    for (const ShortVector& sv : short_vectors(m, max_diag)) {
        by_norm[sv.norm].push_back(sv.x);
        std::vector<Int> neg = sv.x;
        for (Int& v : neg) v = -v;
        by_norm[sv.norm].push_back(std::move(neg));
    }

    StepBudget budget("isometry search");
    IsometryGroupResult out;
    IntMatrix a(n, n);
    std::function<void(int)> place = [&](int i) {
        if (i == n) {
            out.elements.push_back(a);
            return;
        }
        auto it = by_norm.find(m.at(i, i));
        if (it == by_norm.end()) return;
        for (const std::vector<Int>& row : it->second) {
            budget.charge();
            if (!gram_ok(a, m, i, row)) continue;
            for (int k = 0; k < n; ++k) a.at(i, k) = row[static_cast<size_t>(k)];
            place(i + 1);
        }
    };
    place(0);

    std::sort(out.elements.begin(), out.elements.end());
    out.complete = true; // any budget overrun has already thrown
    verify_group(out, m);
    return out;
}

IntMatrix reversal_matrix(int n) {
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, n - 1 - i) = 1;
    return r;
}

std::optional<IsometryGroupResult> gerstein_fast_path(const std::vector<Int>& diagonal) {
    if (diagonal.size() < 2) return std::nullopt;
    for (const Int& d : diagonal)
        if (d < 4) return std::nullopt;
    int n = static_cast<int>(diagonal.size());
    bool palindrome = std::equal(diagonal.begin(), diagonal.end(), diagonal.rbegin());

    IsometryGroupResult g;
    g.complete = true;
    IntMatrix id = IntMatrix::identity(n), neg(n, n);
    for (int i = 0; i < n; ++i) neg.at(i, i) = -1;
    g.elements = {id, neg};
    if (palindrome) {
        IntMatrix rho = reversal_matrix(n), nrho(n, n);
        for (int i = 0; i < n; ++i) nrho.at(i, n - 1 - i) = -1;
        g.elements.push_back(rho);
        g.elements.push_back(nrho);
    }
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

bool acampo_filter(const IsometryGroupResult& g) {
    if (!g.complete)
        throw invalid_input_error("trace filter needs a complete isometry enumeration");
    return std::any_of(g.elements.begin(), g.elements.end(),
                       [](const IntMatrix& a) { return trace_of(a) == -1; });
}

std::pair<bool, bool> palindrome_iff_q2(const LensSpace& l_in) {
    LensSpace l = normalize_lens(l_in);
    auto cf = neg_cf_expand(l.p, l.q);
    for (const Int& a : cf)
        if (a % 2 != 0) throw invalid_input_error("expansion has an odd coefficient");
    bool palindrome = std::equal(cf.begin(), cf.end(), cf.rbegin());
    bool q2 = mod_nonneg(l.q * l.q, l.p) == 1;
    if (palindrome != q2)
        throw inconsistency_error("palindrome test disagrees with q^2 = 1 (mod p)");
    return {palindrome, q2};
}

MilnorReport milnor_verdict(const LensSpace& l_in, const RotationVector& r) {
    LensSpace l = normalize_lens(l_in);
    auto cf = neg_cf_expand(l.p, l.q);
    require_rotation_valid(cf, r);

    MilnorReport rep;
    if (classify(cf, r) == TightClass::UniversallyTight) {
        rep.verdict = MilnorVerdict::NotApplicable;
        rep.reason = "universally tight: the question targets virtually overtwisted structures";
        return rep;
    }

    if (std::any_of(cf.begin(), cf.end(), [](const Int& a) { return a % 2 != 0; })) {
        rep.verdict = MilnorVerdict::Obstructed;
        rep.case_tag = "a";
        rep.reason = "some expansion coefficient is odd";
        return rep;
    }

    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; })) {
        rep.verdict = MilnorVerdict::Obstructed;
        rep.case_tag = "c1";
        rep.reason = "nonzero Euler class: a Milnor fibre boundary has c1 = 0";
        return rep;
    }

    size_t n = cf.size();
    if (n == 1) {
        rep.verdict = MilnorVerdict::Inconclusive;
        rep.reason = "L(2k,1) family: realized by the singularity z^2 + xy^k";
        return rep;
    }

    if (n == 2) {
        // the two-coefficient case: certify by exhausting the isometry group
        IsometryGroupResult g = isometry_search(milnor_form(cf));
        if (acampo_filter(g))
            throw inconsistency_error("unexpected trace -1 isometry in the length-2 case");
        rep.verdict = MilnorVerdict::Obstructed;
        rep.case_tag = "b";
        rep.reason = "length 2: no isometry of the tridiagonal form has trace -1";
        rep.certified = true;
        return rep;
    }

    if (std::any_of(cf.begin(), cf.end(), [](const Int& a) { return a == 2; })) {
        rep.verdict = MilnorVerdict::Inconclusive;
        rep.reason = "a diagonal entry equals 2: outside the isometry classification "
                     "(open case)";
        return rep;
    }

    auto [palindrome, q2] = palindrome_iff_q2(l);
    IsometryGroupResult g = *gerstein_fast_path(cf);
    if (!acampo_filter(g)) {
        rep.verdict = MilnorVerdict::Obstructed;
        rep.case_tag = palindrome ? "c-ii" : "c-i";
        rep.reason = palindrome
                         ? "palindromic, even length: isometries have trace in {n,-n,0}"
                         : "q^2 != 1 (mod p): the only isometries are +-identity";
        return rep;
    }
    rep.verdict = MilnorVerdict::Inconclusive;
    rep.reason = "odd-length palindrome: -reversal has trace -1, candidate not excluded";
    return rep;
}

UniqueFillingNote unique_filling_note(const LensSpace& l_in, const RotationVector& r) {
    LensSpace l = normalize_lens(l_in);
    auto cf = neg_cf_expand(l.p, l.q);
    require_rotation_valid(cf, r);
    UniqueFillingNote note;
    note.unique_filling_hypothesis =
        std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    note.isolated_singularity_eligible = l.q == l.p - 1;
    return note;
}

} // namespace lenscape
