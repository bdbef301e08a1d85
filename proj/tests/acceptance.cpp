// End-to-end acceptance checks, one PASS/FAIL line per criterion: worked
// expansions, duality identities, Euler classes, d3 values, lattice
// embeddings, covering sign systems, pi1 exclusion, Milnor obstructions,
// monodromy factorizations, and Artin presentation algebra.
#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lenscape/artin.hpp"
#include "lenscape/covers.hpp"
#include "lenscape/invariants.hpp"
#include "lenscape/lattice.hpp"
#include "lenscape/mcg.hpp"
#include "lenscape/milnor.hpp"
#include "lenscape/numbers.hpp"
#include "lenscape/tight.hpp"

using namespace lenscape;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

void criterion(int n, const std::string& name, const std::function<void(Checker&)>& body) {
    Checker c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    } catch (...) {
        c.require(false, "unknown exception");
    }
    if (c.ok) {
        std::cout << "PASS criterion " << n << ": " << name << "\n";
    } else {
        std::cout << "FAIL criterion " << n << ": " << name << " -- " << c.why << "\n";
        ++failures;
    }
}

IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

std::set<std::vector<Int>> element_set(const IsometryGroupResult& g) {
    std::set<std::vector<Int>> s;
    for (const auto& m : g.elements) s.insert(m.a);
    return s;
}

std::multiset<Int> coefficient_magnitudes(const SignConstraintSystem& sys) {
    std::multiset<Int> mags;
    for (const auto& term : sys.terms) {
        Int m = term.coefficient;
        if (m < 0) m = -m;
        mags.insert(m);
    }
    return mags;
}

} // namespace

int main() {
    criterion(1, "negative continued fractions of the worked examples", [](Checker& c) {
        auto expect = [&](int p, int q, const std::vector<Int>& want) {
            c.require(neg_cf_expand(Int(p), Int(q)) == want,
                      "expansion of " + std::to_string(p) + "/" + std::to_string(q));
        };
        expect(11, 4, {3, 4});
        expect(17, 7, {3, 2, 4});
        expect(34, 7, {5, 7});
        expect(56, 15, {4, 4, 4});
        expect(25, 7, {4, 3, 2, 2});
    });

    criterion(2, "Riemenschneider duality: length identity, value, involution", [](Checker& c) {
        std::mt19937 rng(2026);
        for (int t = 0; t < 500 && c.ok; ++t) {
            int p = 2 + static_cast<int>(rng() % 9999);
            int q = 1 + static_cast<int>(rng() % (p - 1));
            while (std::gcd(p, q) != 1) q = 1 + static_cast<int>(rng() % (p - 1));
            auto cf = neg_cf_expand(Int(p), Int(q));
            auto dual = riemenschneider_dual(normalize_lens(Int(p), Int(q)));
            Int coeff_sum = 0;
            for (const auto& a : cf) coeff_sum += a;
            c.require(Int(dual.size()) == coeff_sum - 2 * Int(cf.size()) + 1, "dual length identity");
            c.require(cf_evaluate(dual) == Fraction(Int(p), Int(p - q)), "dual evaluates to p/(p-q)");
            c.require(riemenschneider_dual(normalize_lens(Int(p), Int(p - q))) == cf,
                      "duality is an involution");
        }
    });

    criterion(3, "mod-p Euler classes on L(17,7) and L(34,7)", [](Checker& c) {
        auto cf17 = neg_cf_expand(Int(17), Int(7));
        std::multiset<Int> reduced;
        for (const auto& r : enumerate_tight(cf17)) reduced.insert(pd_euler_class(cf17, r).reduced);
        c.require(reduced == std::multiset<Int>({1, 6, 8, 9, 11, 16}), "L(17,7) reduced classes");
        c.require(pd_euler_class(cf17, {1, 0, -2}).reduced == 8, "L(17,7) r=(1,0,-2)");
        auto cf34 = neg_cf_expand(Int(34), Int(7));
        c.require(pd_euler_class(cf34, {3, -5}).reduced == 12, "L(34,7) r=(3,-5)");
        c.require(pd_euler_class(cf34, {3, 1}).reduced == 8, "L(34,7) r=(3,1)");
    });

    criterion(4, "d3 invariants on the worked chains", [](Checker& c) {
        c.require(d3_chain({3, 4}, {1, -2}) == Fraction(-3, 11), "d3 on L(11,4), r=(1,-2)");
        c.require(d3_chain({3, 4}, {1, 0}) == Fraction(-1, 11), "d3 on L(11,4), r=(1,0)");
        c.require(d3_chain({3, 4}, {1, 2}) == Fraction(-5, 11), "d3 on L(11,4), r=(1,2)");
        c.require(d3_chain({4, 4, 4}, {0, 0, 0}) == Fraction(1, 4), "d3 on L(56,15), r=0");
        c.require(d3_invariant(from_rows({{-11}}), {1}, Int(-1), Int(2)) == Fraction(-3, 11),
                  "single-handle d3 via the general formula");
    });

    criterion(5, "unreduced Euler class vanishes exactly at r = 0 (all p <= 60)", [](Checker& c) {
        for (int p = 2; p <= 60 && c.ok; ++p) {
            for (int q = 1; q < p && c.ok; ++q) {
                if (std::gcd(p, q) != 1) continue;
                auto cf = neg_cf_expand(Int(p), Int(q));
                for (const auto& r : enumerate_tight(cf)) {
                    bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
                    auto pd = pd_euler_class(cf, r);
                    c.require((pd.unreduced == 0) == zero, "unreduced class vanishes iff r = 0");
                    c.require(pd.unreduced > -Int(p) && pd.unreduced < Int(p),
                              "unreduced class stays inside (-p, p)");
                    c.require(c1_is_zero(cf, r) == zero, "torsion c1 test agrees");
                    if (!c.ok) break;
                }
            }
        }
    });

    criterion(6, "chain forms: negative exact inverses and the concavity identity", [](Checker& c) {
        std::mt19937 rng(606);
        for (int t = 0; t < 200 && c.ok; ++t) {
            int n = 1 + static_cast<int>(rng() % 8);
            std::vector<Int> cf;
            for (int i = 0; i < n; ++i) cf.emplace_back(2 + static_cast<int>(rng() % 8));
            RationalMatrix inv = exact_inverse(plumbing_form(plumbing_from_cf(cf)));
            for (int i = 0; i < inv.rows; ++i)
                for (int j = 0; j < inv.cols; ++j)
                    c.require(inv.at(i, j) < Fraction(0), "inverse entries are negative");
        }
        for (int t = 0; t < 50 && c.ok; ++t) {
            std::vector<Int> cf;
            Int structures = 1;
            int n = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < n; ++i) {
                Int a = 2 + static_cast<int>(rng() % 5);
                if (structures * (a - 1) > 10000) break;
                cf.push_back(a);
                structures *= a - 1;
            }
            if (cf.empty()) cf.push_back(2);
            c.require(verify_concavity(cf), "concavity identity on a random chain");
        }
    });

    criterion(7, "lattice embeddings of the dual chain of L(11,4)", [](Checker& c) {
        auto dual = riemenschneider_dual(normalize_lens(Int(11), Int(4)));
        c.require(dual == std::vector<Int>({2, 3, 2, 2}), "dual expansion of 11/4");
        LinearPlumbing pl = plumbing_from_cf(dual);
        DiagonalEmbedding emb = max_irreducible_embedding(pl);
        c.require(emb.ambient_rank == 6, "greedy ambient rank");
        ComplementReport comp = orthogonal_complement(emb);
        c.require(comp.gram.rows == 2, "complement rank 2");
        Int det = comp.det;
        if (det < 0) det = -det;
        c.require(det == 11, "complement determinant 11");
        c.require(comp.negative_definite, "complement is negative definite");
        c.require(gauss_reduced_binary(comp.gram) == gauss_reduced_binary(from_rows({{-3, 1}, {1, -4}})),
                  "complement class matches the dual chain form");
        OracleResult at6 = embedding_oracle(pl, 6);
        c.require(!at6.classes.empty(), "embeddings exist at rank 6");
        c.require(at6.irreducible_count == 1, "exactly one irreducible class at rank 6");
        OracleResult at7 = embedding_oracle(pl, 7);
        c.require(at7.irreducible_count == 0, "no irreducible classes at rank 7");
    });

    criterion(8, "double-cover sign constraints on the worked examples", [](Checker& c) {
        LensSpace l34 = normalize_lens(Int(34), Int(7));
        c.require(euler_compatibility_filter(l34, {3, -5}, 2).empty(), "r=(3,-5) admits no lift");
        auto lifts = euler_compatibility_filter(l34, {3, 1}, 2);
        c.require(std::find(lifts.begin(), lifts.end(), RotationVector({1, 0, -2})) != lifts.end(),
                  "r=(3,1) lifts to (1,0,-2)");
        auto system34 = lift_sign_constraints(l34, 2);
        c.require(system34.modulus == 17, "L(34,7) modulus");
        c.require(system34.status == PairingStatus::Validated, "L(34,7) pairing validated");
        c.require(coefficient_magnitudes(system34) == std::multiset<Int>({1, 1, 5, 5, 5}),
                  "L(34,7) coefficient magnitudes");
        c.require(solve_sign_constraints(system34).verdict == SignVerdict::OnlyConstantSigns,
                  "L(34,7) admits only constant signs");

        auto system52 = lift_sign_constraints(normalize_lens(Int(52), Int(11)), 2);
        c.require(system52.modulus == 26, "L(52,11) modulus");
        c.require(coefficient_magnitudes(system52) == std::multiset<Int>({1, 1, 5, 19}),
                  "L(52,11) coefficient magnitudes");
        c.require(solve_sign_constraints(system52).verdict == SignVerdict::OnlyConstantSigns,
                  "L(52,11) admits only constant signs");

        auto system56 = lift_sign_constraints(normalize_lens(Int(56), Int(15)), 2);
        c.require(system56.status == PairingStatus::Validated, "L(56,15) pairing validated");
        auto sol = solve_sign_constraints(system56);
        c.require(sol.verdict == SignVerdict::MixedSolutionExists, "L(56,15) has a mixed solution");
        c.require(sol.witness.size() == system56.terms.size(), "witness covers every term");
        Int dot = 0;
        bool plus = false, minus = false;
        for (size_t i = 0; i < sol.witness.size() && i < system56.terms.size(); ++i) {
            c.require(sol.witness[i] == 1 || sol.witness[i] == -1, "witness entries are signs");
            dot += Int(sol.witness[i]) * system56.terms[i].coefficient;
            (sol.witness[i] == 1 ? plus : minus) = true;
        }
        c.require(dot % system56.modulus == 0, "witness satisfies the congruence");
        c.require(plus && minus, "witness is genuinely mixed");
    });

    criterion(9, "pi1 exclusion report for L(56,15) at r = 0", [](Checker& c) {
        Pi1Report rep = pi1_chi_report(normalize_lens(Int(56), Int(15)), {0, 0, 0});
        c.require(rep.chi_exact.has_value() && *rep.chi_exact == 4, "exact filling chi is 4");
        c.require(rep.surviving_orders == std::vector<Int>({1}), "only the trivial pi1 survives");
        c.require(rep.excluded_orders == std::vector<Int>({2, 4, 7, 8, 14, 28, 56}),
                  "excluded covering orders");
        auto bound = [&](int degree) -> Fraction {
            for (const auto& d : rep.divisors)
                if (d.degree == degree) return d.chi_bound;
            c.require(false, "missing divisor record");
            return Fraction(0);
        };
        c.require(bound(2) == Fraction(2), "chi bound at degree 2");
        c.require(bound(4) == Fraction(1, 2), "chi bound at degree 4");
        c.require(bound(8) == Fraction(1, 4), "chi bound at degree 8");
    });

    criterion(10, "Milnor-fibre obstruction case analysis", [](Checker& c) {
        auto verdict = [](int p, int q, const RotationVector& r) {
            return milnor_verdict(normalize_lens(Int(p), Int(q)), r);
        };
        auto rep = verdict(11, 4, {1, -2});
        c.require(rep.verdict == MilnorVerdict::Obstructed && rep.case_tag == "a", "odd coefficient: case a");
        rep = verdict(23, 6, {0, 0});
        c.require(rep.verdict == MilnorVerdict::Obstructed && rep.case_tag == "b" && rep.certified,
                  "rank-2 exhaustive search: case b, certified");
        rep = verdict(86, 23, {0, 0, 0});
        c.require(rep.verdict == MilnorVerdict::Obstructed && rep.case_tag == "c-i",
                  "non-palindromic expansion: case c-i");
        rep = verdict(88, 23, {0, 0, 0});
        c.require(rep.verdict == MilnorVerdict::Inconclusive, "palindromic trace survivor: inconclusive");
        rep = verdict(513, 134, {0, 0, 0, 0});
        c.require(rep.verdict == MilnorVerdict::Obstructed && rep.case_tag == "c-ii",
                  "palindrome without a trace -1 isometry: case c-ii");
        rep = verdict(12, 7, {0, 0, 0});
        c.require(rep.verdict == MilnorVerdict::Inconclusive, "coefficient 2 present: inconclusive");
        rep = verdict(23, 6, {2, 0});
        c.require(rep.verdict == MilnorVerdict::Obstructed && rep.case_tag == "c1",
                  "nonzero rotation: case c1");
        rep = verdict(11, 4, {1, 2});
        c.require(rep.verdict == MilnorVerdict::NotApplicable, "universally tight: not applicable");

        for (int x1 = 2; x1 <= 4 && c.ok; ++x1)
            for (int x2 = 2; x2 <= 4 && c.ok; ++x2) {
                std::vector<Int> diag2{2 * x1, 2 * x2};
                auto fast2 = gerstein_fast_path(diag2);
                c.require(fast2.has_value() &&
                              element_set(*fast2) == element_set(isometry_search(milnor_form(diag2))),
                          "fast path agrees with the exhaustive search (rank 2)");
                for (int x3 = 2; x3 <= 4 && c.ok; ++x3) {
                    std::vector<Int> diag3{2 * x1, 2 * x2, 2 * x3};
                    auto fast3 = gerstein_fast_path(diag3);
                    c.require(fast3.has_value() &&
                                  element_set(*fast3) == element_set(isometry_search(milnor_form(diag3))),
                              "fast path agrees with the exhaustive search (rank 3)");
                }
            }
        for (int x1 = 2; x1 <= 6 && c.ok; ++x1)
            for (int x2 = 2; x2 <= 6; ++x2) {
                IntMatrix m = from_rows({{2 * x1, -1}, {-1, 2 * x2}});
                c.require(!acampo_filter(isometry_search(m)),
                          "no trace -1 isometry for rank-2 forms with entries >= 4");
            }
    });

    criterion(11, "monodromy factorizations and the configuration search", [](Checker& c) {
        TwistFactorization chain = chain_factorization(3, 4);
        c.require(chain.twists.size() == 6, "the (3,4) chain has 6 twists");
        IntMatrix target = multiplicity_matrix(chain);
        c.require(target == from_rows({{3, 2, 2, 2}, {2, 3, 1, 1}, {2, 1, 3, 2}, {2, 1, 2, 3}}),
                  "(3,4) multiplicity matrix");

        IntMatrix m56 = multiplicity_matrix(chain_factorization(5, 6));
        int k = 3; // a1 - 2 holes in the positive group
        for (int i = 0; i < m56.rows && c.ok; ++i)
            for (int j = 0; j < m56.cols; ++j) {
                Int want;
                if (i == j)
                    want = 3;
                else if (i == 0 || j == 0)
                    want = 2;
                else if ((i <= k) == (j <= k))
                    want = 2;
                else
                    want = 1;
                c.require(m56.at(i, j) == want, "(5,6) multiplicity profile");
            }

        auto configs = enumerate_configurations(target, 6, {{1}, {2, 3}});
        c.require(configs.size() == 2, "two configuration classes hit the (3,4) matrix");

        Configuration before;
        for (const auto& t : chain.twists) before.push_back(t.holes);
        std::sort(before.begin(), before.end());
        Configuration after = lantern_rewrite(before, {0, 1}, {2}, {3});
        c.require(after.size() + 1 == before.size(), "lantern drops the curve count by one");
        c.require(configuration_matrix(after, 4) == configuration_matrix(before, 4),
                  "lantern preserves the multiplicity matrix");
        auto unit = [](const Configuration& curves, int holes) {
            TwistFactorization f;
            f.num_holes = holes;
            for (const auto& s : curves) f.twists.push_back({s, 1});
            return f;
        };
        c.require(palf_euler(unit(before, 4)).chi == 3, "chi of the chain fibration");
        c.require(palf_euler(unit(after, 4)).chi == 2, "chi drops by one after the lantern");

        IntMatrix target55 = multiplicity_matrix(chain_factorization(5, 5));
        auto configs55 = enumerate_configurations(target55, 21, {{1, 2, 3}, {4, 5, 6}});
        c.require(configs55.size() == 1, "unique configuration class for the (5,5) matrix");
        c.require(configs55.size() == 1 && configs55[0].size() == 9, "the (5,5) class has 9 curves");
    });

    criterion(12, "Artin presentation algebra and the fillability screen", [](Checker& c) {
        std::mt19937 rng(1212);
        for (int t = 0; t < 100 && c.ok; ++t) {
            int n = 1 + static_cast<int>(rng() % 4);
            int i = 1 + static_cast<int>(rng() % n);
            Int k = static_cast<int>(rng() % 9) - 4;
            c.require(artin_valid(boundary_twist_presentation(n, i, k)), "boundary twists are valid");
        }
        for (int t = 0; t < 100 && c.ok; ++t) {
            Int a = static_cast<int>(rng() % 9) - 4;
            Int b = static_cast<int>(rng() % 9) - 4;
            Int cc = static_cast<int>(rng() % 9) - 4;
            ArtinPresentation p = pabc(a, b, cc);
            c.require(artin_valid(p), "pabc presentations are valid");
            c.require(relation_matrix(p) == from_rows({{a + cc, cc}, {cc, b + cc}}),
                      "pabc exponent-sum matrix");
        }
        for (int t = 0; t < 200 && c.ok; ++t) {
            auto pick = [&]() { return Int(static_cast<int>(rng() % 9) - 4); };
            Int a = pick(), b = pick(), cc = pick(), a2 = pick(), b2 = pick(), c2 = pick();
            ArtinPresentation prod = artin_product(pabc(a, b, cc), pabc(a2, b2, c2));
            ArtinPresentation want = pabc(a + a2, b + b2, cc + c2);
            c.require(prod.n == want.n && prod.relations == want.relations,
                      "pabc products add coefficients");
        }
        c.require(stein_fillable_screen(pabc(1, 1, -1)) == FillObstruction::FailsNecessary,
                  "p(1,1,-1) fails the screen");
        c.require(stein_fillable_screen(pabc(2, 3, 1)) == FillObstruction::PassesNecessary,
                  "p(2,3,1) passes the screen");
        c.require(!quasipositivity_screen(from_rows({{7, 5, 2}, {5, 4, -1}, {2, -1, 1}})),
                  "mixed-sign relation matrix fails quasipositivity");
    });

    if (failures == 0) {
        std::cout << "all 12 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
