#include "lenscape/covers.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"
#include "lenscape/invariants.hpp"

namespace lenscape {

namespace {

std::vector<Int> divisors_of(const Int& p) {
    std::vector<Int> small, large;
    StepBudget budget("divisor enumeration");
    for (Int i = 1; i * i <= p; ++i) {
        budget.charge();
        if (p % i != 0) continue;
        small.push_back(i);
        if (i * i != p) large.push_back(p / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

LensSpace total_space(const LensSpace& base, const Int& d) {
    // the degree-d cyclic cover of L(p,q) is L(p/d, q mod p/d)
    return normalize_lens(base.p / d, base.q);
}

void require_degree(const LensSpace& base, const Int& d) {
    if (d < 1 || d > base.p || base.p % d != 0)
        throw invalid_input_error("cover degree must divide p");
}

bool all_twos(const std::vector<Int>& cf) {
    return std::all_of(cf.begin(), cf.end(), [](const Int& a) { return a == 2; });
}

// value of a basic slope after lifting to the degree-d cover: (-qb, pb) |-> -pb/(d qb)
Fraction lifted_value(const Slope& s, const Int& d) {
    return Fraction{-s.p, d * s.q};
}

struct Interval {
    Fraction lo, hi;
    Int magnitude;   // slice contribution |Delta|
    int block = -1;  // originating block (for provenance)
};

bool overlaps(const Interval& a, const Interval& b) {
    return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

std::vector<Interval> slice_intervals(const BlockDecomposition& dec,
                                      const std::optional<Int>& lift_degree) {
    std::vector<Interval> out;
    for (const SliceInterval& s : dec.slices) {
        Interval iv;
        if (lift_degree) {
            iv.lo = lifted_value(dec.slopes[static_cast<size_t>(s.lo)], *lift_degree);
            iv.hi = lifted_value(dec.slopes[static_cast<size_t>(s.hi)], *lift_degree);
        } else {
            iv.lo = dec.slopes[static_cast<size_t>(s.lo)].value();
            iv.hi = dec.slopes[static_cast<size_t>(s.hi)].value();
        }
        iv.magnitude = dec.blocks[static_cast<size_t>(s.block_index)].contribution;
        iv.block = s.block_index;
        out.push_back(iv);
    }
    return out;
}

} // namespace

std::vector<CoverDatum> covering_lattice(const LensSpace& l) {
    LensSpace base = normalize_lens(l);
    std::vector<CoverDatum> out;
    for (const Int& d : divisors_of(base.p)) {
        if (d == 1) continue;
        CoverDatum c;
        c.base = base;
        c.degree = d;
        if (d != base.p) c.total = total_space(base, d);
        out.push_back(c);
    }
    return out;
}

std::vector<RotationVector> euler_compatibility_filter(const LensSpace& base_in,
                                                       const RotationVector& r,
                                                       const Int& degree) {
    LensSpace base = normalize_lens(base_in);
    auto cf = neg_cf_expand(base.p, base.q);
    require_rotation_valid(cf, r);
    if (degree == 1) return {r};
    require_degree(base, degree);
    if (degree == base.p)
        throw invalid_input_error("filter undefined for the universal cover (S^3 total space)");

    LensSpace total = total_space(base, degree);
    auto cf_t = neg_cf_expand(total.p, total.q);
    Int target = pd_euler_class(cf, r).reduced;
    bool base_vo = classify(cf, r) == TightClass::VirtuallyOvertwisted;

    std::vector<RotationVector> out;
    for (const RotationVector& v : enumerate_tight(cf_t)) {
        Int pd = pd_euler_class(cf_t, v).reduced;
        Int diff = mod_nonneg(degree * (pd - target), base.p);
        Int sum = mod_nonneg(degree * (pd + target), base.p);
        if (diff != 0 && sum != 0) continue;
        if (base_vo && classify(cf_t, v) == TightClass::UniversallyTight) continue;
        out.push_back(v);
    }
    return out;
}

bool overtwisted_lift_basic(const LensSpace& base_in, const Int& degree) {
    LensSpace base = normalize_lens(base_in);
    require_degree(base, degree);
    return base.q < base.p && base.p < degree * base.q;
}

RefinedLiftCriterion overtwisted_lift_refined(const LensSpace& base_in, const Int& degree) {
    LensSpace base = normalize_lens(base_in);
    require_degree(base, degree);

    auto cf = neg_cf_expand(base.p, base.q);
    cf.back() -= 1; // may decay to a trailing 1; cf_evaluate contracts it
    RefinedLiftCriterion out;
    out.expansion_route = cf_evaluate(cf);

    Int qstar = mod_inverse(base.q, base.p);
    Int p2 = base.p - qstar;
    Int q2 = (p2 == 1) ? Int(1) : mod_inverse(qstar, p2);
    out.intrinsic_route = Fraction{p2, q2};

    out.routes_agree = out.expansion_route == out.intrinsic_route;
    if (!out.routes_agree)
        throw inconsistency_error("refined lift: expansion and inverse routes disagree");

    const Int& pp = out.expansion_route.num;
    const Int& qp = out.expansion_route.den;
    out.overtwisted = pp < degree * qp;
    return out;
}

SignConstraintSystem lift_sign_constraints(const LensSpace& base_in, const Int& degree) {
    LensSpace base = normalize_lens(base_in);
    require_degree(base, degree);
    if (degree == 1) throw invalid_input_error("sign system needs degree > 1");
    if (degree == base.p)
        throw invalid_input_error("sign system undefined for the universal cover");

    BlockDecomposition dec_base = honda_blocks(base);

    SignConstraintSystem sys;
    LensSpace total = total_space(base, degree);
    sys.modulus = total.p;

    if (dec_base.slices.empty()) {
        sys.note = "no basic slices downstairs; empty system";
        return sys;
    }

    // the lifted initial slope -p/(dq) must reduce to the cover's initial
    // slope -p'/q'; this fails exactly when q >= p/d (slope wraparound)
    if (base.q >= total.p) {
        sys.status = PairingStatus::PairingFailed;
        sys.note = "slope wraparound: q >= p/d, lifted slopes leave the cover's range";
        return sys;
    }

    BlockDecomposition dec_total = honda_blocks(total);

    const auto& limits = search_limits();
    if (limits.gates_enabled) {
        auto count = [](const std::vector<SliceInterval>& s) { return s.size(); };
        if (count(dec_base.slices) > 20 || count(dec_total.slices) > 20)
            throw resource_limit_error("slice pairing capped at 20 slices per side "
                                       "(set LENSCAPE_MAX_SEARCH to lift)");
    }

    std::vector<Interval> down = slice_intervals(dec_base, degree);
    std::vector<Interval> up = slice_intervals(dec_total, std::nullopt);

    // group slices by transitive interval overlap (union-find over down + up)
    size_t nd = down.size(), nu = up.size();
    std::vector<size_t> parent(nd + nu);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    for (size_t i = 0; i < nd; ++i)
        for (size_t j = 0; j < nu; ++j)
            if (overlaps(down[i], up[j])) unite(i, nd + j);

    std::map<size_t, std::pair<std::vector<size_t>, std::vector<size_t>>> groups;
    for (size_t i = 0; i < nd; ++i) groups[find(i)].first.push_back(i);
    for (size_t j = 0; j < nu; ++j) groups[find(nd + j)].second.push_back(j);

    bool aligned = true;
    // ordered by lower endpoint so term order follows the decomposition
    std::vector<std::pair<Fraction, SignTerm>> staged;
    for (const auto& [root, g] : groups) {
        const auto& [bs, us] = g;
        if (bs.empty()) {
            // a cover slice no lifted slice touches: the pairing premise failed
            sys.status = PairingStatus::PairingFailed;
            sys.note = "cover slice with no lifted counterpart";
            sys.terms.clear();
            return sys;
        }
        std::ostringstream prov;
        SignTerm term;
        Fraction key;
        if (us.empty()) {
            // free slice: lives in a standard torus region of the cover
            const Interval& b = down[bs.front()];
            term.coefficient = b.magnitude;
            term.linked = false;
            key = b.lo;
            prov << "free slice of block " << b.block;
            // validated only if it sits inside one torus region: below the
            // cover's first slice or above its last
            Fraction first_lo = up.front().lo, last_hi = up.back().hi;
            if (!(b.hi <= first_lo || b.lo >= last_hi)) aligned = false;
        } else {
            Int sum = 0;
            Fraction lo = down[bs.front()].lo, hi = down[bs.front()].hi;
            for (size_t i : bs) {
                sum += down[i].magnitude;
                lo = std::min(lo, down[i].lo);
                hi = std::max(hi, down[i].hi);
            }
            Fraction ulo = up[us.front()].lo, uhi = up[us.front()].hi;
            for (size_t j : us) {
                sum -= up[j].magnitude;
                ulo = std::min(ulo, up[j].lo);
                uhi = std::max(uhi, up[j].hi);
            }
            if (lo != ulo || hi != uhi) aligned = false;
            term.coefficient = sum;
            term.linked = true;
            key = lo;
            prov << bs.size() << " lifted slice(s) against " << us.size() << " cover slice(s)";
        }
        // keep the sign: reducing |M - m| instead can flip which assignments solve
        term.coefficient = mod_nonneg(term.coefficient, sys.modulus);
        if (term.coefficient == 0) continue;
        term.provenance = prov.str();
        staged.emplace_back(key, term);
    }
    std::stable_sort(staged.begin(), staged.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, t] : staged) sys.terms.push_back(std::move(t));

    if (!aligned && sys.status == PairingStatus::Validated) {
        sys.status = PairingStatus::Heuristic;
        sys.note = "slice boundaries misaligned; grouping is by overlap only";
    }
    return sys;
}

SignSolution solve_sign_constraints(const SignConstraintSystem& sys) {
    if (sys.status == PairingStatus::PairingFailed)
        throw invalid_input_error("cannot solve an unusable sign system");
    size_t k = sys.terms.size();
    const auto& limits = search_limits();
    if (limits.gates_enabled && k > 24)
        throw resource_limit_error("sign system solver capped at 24 terms "
                                   "(set LENSCAPE_MAX_SEARCH to lift)");
    if (k > 40) throw resource_limit_error("sign system too large to enumerate");
    StepBudget budget("sign system enumeration");
    budget.charge(std::uint64_t{1} << k);

    SignSolution out{SignVerdict::Inconsistent, {}};
    bool constant_ok = false, mixed_found = false;
    std::vector<int> witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Int sum = 0;
        for (size_t i = 0; i < k; ++i)
            sum += (mask >> i & 1) ? -sys.terms[i].coefficient : sys.terms[i].coefficient;
        if (mod_nonneg(sum, sys.modulus) != 0) continue;
        bool all_plus = mask == 0;
        bool all_minus = k > 0 && mask == (std::uint64_t{1} << k) - 1;
        if (all_plus) constant_ok = true;
        if (!all_plus && !all_minus && !mixed_found) {
            mixed_found = true;
            witness.resize(k);
            for (size_t i = 0; i < k; ++i) witness[i] = (mask >> i & 1) ? -1 : 1;
        }
    }
    if (!constant_ok) {
        out.verdict = SignVerdict::Inconsistent;
    } else if (mixed_found) {
        out.verdict = SignVerdict::MixedSolutionExists;
        out.witness = std::move(witness);
    } else {
        out.verdict = SignVerdict::OnlyConstantSigns;
    }
    return out;
}

Pi1Report pi1_chi_report(const LensSpace& base_in, const RotationVector& r) {
    LensSpace base = normalize_lens(base_in);
    auto cf = neg_cf_expand(base.p, base.q);
    require_rotation_valid(cf, r);

    Pi1Report rep;
    rep.base = base;
    rep.rotation = r;
    rep.base_is_ut = classify(cf, r) == TightClass::UniversallyTight;

    bool r_zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    if (r_zero) rep.chi_exact = chi_from_d3(d3_chain(cf, r));
    rep.chi_at_least_two =
        rational_ball_obstruction(cf, r).verdict == BallVerdict::Obstructed;

    rep.chi_min = Fraction{1, 1};
    if (rep.chi_at_least_two) rep.chi_min = Fraction{2, 1};
    if (rep.chi_exact) rep.chi_min = Fraction{*rep.chi_exact, 1};

    for (const CoverDatum& c : covering_lattice(base)) {
        DivisorRecord d;
        d.degree = c.degree;
        d.total = c.total;
        d.basic_criterion = overtwisted_lift_basic(base, c.degree);
        d.refined_criterion = overtwisted_lift_refined(base, c.degree).overtwisted;
        Int len = 0;
        if (c.total) {
            auto cf_t = neg_cf_expand(c.total->p, c.total->q);
            len = Int(cf_t.size());
            d.ut_forcing = all_twos(cf_t);
            d.euler_filter_empty = euler_compatibility_filter(base, r, c.degree).empty();
            auto sys = lift_sign_constraints(base, c.degree);
            if (sys.status == PairingStatus::Validated)
                d.sign_verdict = solve_sign_constraints(sys).verdict;
        } else {
            d.ut_forcing = true; // S^3 carries a unique tight structure, the ut one
        }
        d.chi_bound = Fraction{1 + len, c.degree};
        if (!rep.base_is_ut) {
            d.known_overtwisted =
                d.basic_criterion || d.refined_criterion || d.ut_forcing ||
                (d.euler_filter_empty && *d.euler_filter_empty) ||
                (d.sign_verdict && *d.sign_verdict == SignVerdict::OnlyConstantSigns);
        }
        rep.divisors.push_back(std::move(d));
    }

    if (rep.base_is_ut) {
        rep.note = "universally tight: lifts stay tight, no covering constraint";
        for (const Int& k : divisors_of(base.p)) rep.surviving_orders.push_back(k);
        return rep;
    }

    // pi1 = Z/k forces the degree-d cover of the boundary to bound a piece of
    // the filling's cover for every d | k; an overtwisted lift kills k, and
    // chi(filling) > (1 + length)/d kills k = d directly
    std::set<Int> excluded;
    for (const DivisorRecord& d : rep.divisors) {
        if (d.known_overtwisted)
            for (const Int& k : divisors_of(base.p))
                if (k % d.degree == 0) excluded.insert(k);
        if (rep.chi_min > d.chi_bound) excluded.insert(d.degree);
    }
    for (const Int& k : divisors_of(base.p)) {
        if (excluded.count(k))
            rep.excluded_orders.push_back(k);
        else
            rep.surviving_orders.push_back(k);
    }
    return rep;
}

} // namespace lenscape
