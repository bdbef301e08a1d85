#include "lenscape/mcg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"

namespace lenscape {

namespace {

void require_holeset(const HoleSet& s, int num_holes) {
    if (s.empty()) throw invalid_input_error("empty hole-set");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= num_holes) throw invalid_input_error("hole index out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw invalid_input_error("hole-set not sorted/distinct");
    }
}

int holes_upper_bound(const Configuration& curves) {
    int h = 0;
    for (const HoleSet& s : curves)
        for (int i : s) h = std::max(h, i + 1);
    return h;
}

bool disjoint(const HoleSet& a, const HoleSet& b) {
    std::vector<int> tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
    return tmp.empty();
}

HoleSet set_union(const HoleSet& a, const HoleSet& b) {
    HoleSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

void erase_one(Configuration& curves, const HoleSet& s) {
    auto it = std::find(curves.begin(), curves.end(), s);
    if (it == curves.end()) throw invalid_input_error("hole-set not present in the multiset");
    curves.erase(it);
}

// Smith normal form diagonal (absolute values) of an integer matrix
std::vector<Int> smith_diagonal(IntMatrix m) {
    std::vector<Int> diag;
    int top = 0;
    auto nonzero_below = [&](int t) {
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j)
                if (m.at(i, j) != 0) return true;
        return false;
    };
    while (top < m.rows && top < m.cols && nonzero_below(top)) {
        // move a minimal-magnitude nonzero entry to the pivot
        int pi = -1, pj = -1;
        for (int i = top; i < m.rows; ++i)
            for (int j = top; j < m.cols; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(top, j), m.at(pi, j));
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, pj));

        bool dirty = false;
        for (int i = top + 1; i < m.rows; ++i) {
            Int f = m.at(i, top) / m.at(top, top);
            if (f != 0)
                for (int j = top; j < m.cols; ++j) m.at(i, j) -= f * m.at(top, j);
            if (m.at(i, top) != 0) dirty = true;
        }
        for (int j = top + 1; j < m.cols; ++j) {
            Int f = m.at(top, j) / m.at(top, top);
            if (f != 0)
                for (int i = top; i < m.rows; ++i) m.at(i, j) -= f * m.at(i, top);
            if (m.at(top, j) != 0) dirty = true;
        }
        if (dirty) continue; // smaller remainders appeared; re-pick the pivot

        // enforce the divisibility chain
        bool fixed = false;
        for (int i = top + 1; i < m.rows && !fixed; ++i)
            for (int j = top + 1; j < m.cols && !fixed; ++j)
                if (m.at(i, j) % m.at(top, top) != 0) {
                    for (int c = top; c < m.cols; ++c) m.at(top, c) += m.at(i, c);
                    fixed = true;
                }
        if (fixed) continue;
        diag.push_back(abs(m.at(top, top)));
        ++top;
    }
    return diag;
}

} // namespace

IntMatrix multiplicity_matrix(const TwistFactorization& f) {
    if (f.num_holes < 0) throw invalid_input_error("negative hole count");
    if (!f.hole_names.empty() && static_cast<int>(f.hole_names.size()) != f.num_holes)
        throw invalid_input_error("hole name count mismatch");
    IntMatrix m(f.num_holes, f.num_holes);
    for (const Twist& t : f.twists) {
        require_holeset(t.holes, f.num_holes);
        if (t.power == 0) throw invalid_input_error("twist power must be nonzero");
        for (int i : t.holes)
            for (int j : t.holes) m.at(i, j) += t.power;
    }
    return m;
}

IntMatrix configuration_matrix(const Configuration& curves, int num_holes) {
    TwistFactorization f;
    f.num_holes = num_holes;
    for (const HoleSet& s : curves) f.twists.push_back({s, 1});
    return multiplicity_matrix(f);
}

Configuration lantern_rewrite(const Configuration& curves, const HoleSet& s1,
                              const HoleSet& s2, const HoleSet& s3) {
    int h = holes_upper_bound(curves);
    for (const HoleSet* s : {&s1, &s2, &s3}) require_holeset(*s, h);
    if (!disjoint(s1, s2) || !disjoint(s1, s3) || !disjoint(s2, s3))
        throw invalid_input_error("lantern pick must be pairwise disjoint");

    HoleSet big = set_union(set_union(s1, s2), s3);
    Configuration out = curves;
    std::sort(out.begin(), out.end());
    erase_one(out, s1);
    erase_one(out, s2);
    erase_one(out, s3);
    erase_one(out, big);
    out.push_back(set_union(s1, s2));
    out.push_back(set_union(s1, s3));
    out.push_back(set_union(s2, s3));
    std::sort(out.begin(), out.end());

    if (configuration_matrix(out, h) != configuration_matrix(curves, h))
        throw inconsistency_error("lantern rewrite changed the multiplicity matrix");
    return out;
}

std::vector<Configuration> enumerate_configurations(
    const IntMatrix& target, int max_curves,
    const std::vector<std::vector<int>>& interchangeable) {
    if (target.rows != target.cols || !target.is_symmetric())
        throw invalid_input_error("target must be a symmetric square matrix");
    int h = target.rows;
    if (h <= 0) throw invalid_input_error("target needs at least one hole");
    for (const Int& v : target.a)
        if (v < 0) throw invalid_input_error("target entries must be nonnegative");
    const auto& limits = search_limits();
    if (limits.gates_enabled && h > 8)
        throw resource_limit_error("configuration enumeration capped at 8 holes "
                                   "(set LENSCAPE_MAX_SEARCH to lift)");
    if (h > 16) throw resource_limit_error("configuration enumeration needs <= 16 holes");
    if (max_curves < 0) throw invalid_input_error("max curves must be nonnegative");

    // declared interchangeable groups must actually preserve the target
    std::vector<bool> seen(static_cast<size_t>(h), false);
    for (const auto& g : interchangeable) {
        for (int i : g) {
            if (i < 0 || i >= h) throw invalid_input_error("symmetry hole index out of range");
            if (seen[static_cast<size_t>(i)])
                throw invalid_input_error("symmetry groups must be disjoint");
            seen[static_cast<size_t>(i)] = true;
        }
        for (size_t a = 0; a + 1 < g.size(); ++a) {
            int i = g[a], j = g[a + 1];
            for (int k = 0; k < h; ++k) {
                int ki = k == i ? j : (k == j ? i : k);
                if (target.at(i, k) != target.at(j, ki) || target.at(k, i) != target.at(ki, j))
                    throw invalid_input_error("declared symmetry does not preserve the target");
            }
        }
    }

    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << h); ++mask)
        if (__builtin_popcount(mask) >= 2) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::vector<int>> mask_members(masks.size());
    for (size_t s = 0; s < masks.size(); ++s)
        for (int i = 0; i < h; ++i)
            if (masks[s] >> i & 1) mask_members[s].push_back(i);
    // candidate curves through each unordered pair, in global mask order
    std::vector<std::vector<size_t>> pair_masks(static_cast<size_t>(h) * h);
    for (size_t s = 0; s < masks.size(); ++s)
        for (int i : mask_members[s])
            for (int j : mask_members[s])
                if (i < j) pair_masks[static_cast<size_t>(i) * h + j].push_back(s);

    StepBudget budget("configuration enumeration");
    IntMatrix remaining = target;
    std::vector<Int> counts(masks.size(), 0);
    Int curves_used = 0;
    std::vector<Configuration> found;

    auto emit = [&]() {
        Int total = curves_used;
        for (int i = 0; i < h; ++i) total += remaining.at(i, i);
        if (total > max_curves) return;
        Configuration cfg;
        for (size_t s = 0; s < masks.size(); ++s)
            for (Int c = 0; c < counts[s]; ++c) cfg.push_back(mask_members[s]);
        for (int i = 0; i < h; ++i)
            for (Int c = 0; c < remaining.at(i, i); ++c) cfg.push_back({i});
        std::sort(cfg.begin(), cfg.end());
        found.push_back(std::move(cfg));
    };

    // branch on the first unsatisfied off-diagonal pair: any solution must
    // cover it, so every node consumes a specific constraint, and deciding the
    // full sub-multiset of curves through that pair at one node (counts in
    // candidate order) makes the traversal duplicate-free
    std::function<void()> descend = [&]() {
        budget.charge();
        int pi = -1, pj = -1;
        for (int i = 0; i < h && pi < 0; ++i)
            for (int j = i + 1; j < h; ++j)
                if (remaining.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) {
            emit();
            return;
        }
        const auto& cand = pair_masks[static_cast<size_t>(pi) * h + pj];
        std::function<void(size_t)> choose = [&](size_t ci) {
            if (remaining.at(pi, pj) == 0) {
                descend();
                return;
            }
            if (ci == cand.size()) return; // pair cannot be completed
            budget.charge();
            size_t s = cand[ci];
            const auto& members = mask_members[s];
            Int cap = remaining.at(pi, pj);
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = a; b < members.size(); ++b)
                    cap = std::min(cap, remaining.at(members[a], members[b]));
            cap = std::min(cap, Int(max_curves) - curves_used);

            choose(ci + 1); // zero copies of this curve
            Int c = 0;
            while (c < cap) {
                ++c;
                for (int i : members)
                    for (int j : members) remaining.at(i, j) -= 1;
                counts[s] += 1;
                curves_used += 1;
                choose(ci + 1);
            }
            if (c > 0) {
                for (int i : members)
                    for (int j : members) remaining.at(i, j) += c;
                counts[s] -= c;
                curves_used -= c;
            }
        };
        choose(0);
    };
    descend();

    // canonicalize under the declared hole symmetries
    Int perm_count = 1;
    for (const auto& g : interchangeable) {
        for (size_t i = 2; i <= g.size(); ++i) perm_count *= Int(i);
    }
    if (limits.gates_enabled && perm_count > 40320)
        throw resource_limit_error("symmetry group too large for canonicalization");

    auto canonical = [&](const Configuration& cfg) {
        std::vector<int> perm(static_cast<size_t>(h));
        std::iota(perm.begin(), perm.end(), 0);
        Configuration best = cfg;
        std::function<void(size_t)> walk = [&](size_t gi) {
            if (gi == interchangeable.size()) {
                budget.charge();
                Configuration mapped;
                for (const HoleSet& hs : cfg) {
                    HoleSet m2;
                    for (int i : hs) m2.push_back(perm[static_cast<size_t>(i)]);
                    std::sort(m2.begin(), m2.end());
                    mapped.push_back(std::move(m2));
                }
                std::sort(mapped.begin(), mapped.end());
                if (mapped < best) best = std::move(mapped);
                return;
            }
            std::vector<int> idx = interchangeable[gi];
            std::sort(idx.begin(), idx.end());
            std::vector<int> images = idx;
            do {
                for (size_t k = 0; k < idx.size(); ++k)
                    perm[static_cast<size_t>(idx[k])] = images[k];
                walk(gi + 1);
            } while (std::next_permutation(images.begin(), images.end()));
        };
        walk(0);
        return best;
    };

    std::set<Configuration> classes;
    for (const Configuration& cfg : found) classes.insert(canonical(cfg));

    std::vector<Configuration> out(classes.begin(), classes.end());
    for (const Configuration& cfg : out)
        if (configuration_matrix(cfg, h) != target)
            throw inconsistency_error("enumerated configuration fails the round trip");
    return out;
}

PalfInvariants palf_euler(const TwistFactorization& f) {
    for (const Twist& t : f.twists) {
        require_holeset(t.holes, f.num_holes);
        if (t.power <= 0)
            throw invalid_input_error("not a positive factorization: power <= 0");
    }
    Int total = 0;
    for (const Twist& t : f.twists) total += t.power;

    PalfInvariants inv;
    inv.chi = 1 - f.num_holes + total;

    // one row per distinct twist entry; duplicates change neither rank nor H1
    IntMatrix incidence(static_cast<int>(f.twists.size()), f.num_holes);
    for (size_t r = 0; r < f.twists.size(); ++r)
        for (int i : f.twists[r].holes) incidence.at(static_cast<int>(r), i) = 1;
    std::vector<Int> diag = smith_diagonal(incidence);

    Int rank = Int(diag.size());
    inv.b2 = total - rank;
    inv.h1_rank = f.num_holes - rank;
    for (const Int& d : diag)
        if (d > 1) inv.h1_torsion.push_back(d);
    return inv;
}

bool quasipositivity_screen(const IntMatrix& m) {
    for (const Int& v : m.a)
        if (v < 0) return false;
    for (int i = 0; i < m.rows && i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) > m.at(i, i)) return false;
    return true;
}

TwistFactorization chain_factorization(const Int& a1, const Int& a2) {
    if (a1 < 2 || a2 < 2) throw invalid_input_error("chain coefficients must be >= 2");
    if (a1 > 30 || a2 > 30) throw resource_limit_error("chain factorization capped at 30");
    int k = static_cast<int>(a1) - 2;
    int l = static_cast<int>(a2) - 2;

    TwistFactorization f;
    f.num_holes = 1 + k + l;
    f.hole_names.push_back("s");
    for (int i = 1; i <= k; ++i) f.hole_names.push_back("p" + std::to_string(i));
    for (int j = 1; j <= l; ++j) f.hole_names.push_back("n" + std::to_string(j));

    HoleSet all, beta{0}, gamma{0};
    for (int i = 0; i < f.num_holes; ++i) all.push_back(i);
    for (int i = 1; i <= k; ++i) beta.push_back(i);
    for (int j = k + 1; j <= k + l; ++j) gamma.push_back(j);
    f.twists.push_back({all, 1});
    f.twists.push_back({beta, 1});
    f.twists.push_back({gamma, 1});
    for (int i = 1; i <= k + l; ++i) f.twists.push_back({HoleSet{i}, 1});
    return f;
}

} // namespace lenscape
