#include "lenscape/tight.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"
#include "lenscape/invariants.hpp"

namespace lenscape {

using boost::multiprecision::abs;

bool rotation_valid(const std::vector<Int>& cf, const RotationVector& r) {
    if (cf.size() != r.size()) return false;
    for (size_t i = 0; i < cf.size(); ++i) {
        if (abs(r[i]) > cf[i] - 2) return false;
        if (mod_nonneg(r[i] - cf[i], 2) != 0) return false;
    }
    return true;
}

void require_rotation_valid(const std::vector<Int>& cf, const RotationVector& r) {
    if (!rotation_valid(cf, r))
        throw invalid_input_error("invalid rotation vector for this chain");
}

Int tight_count(const std::vector<Int>& cf) {
    Int n = 1;
    for (const Int& a : cf) {
        if (a < 2) throw invalid_input_error("chain coefficients must be >= 2");
        n *= a - 1;
    }
    return n;
}

std::vector<RotationVector> enumerate_tight(const std::vector<Int>& cf) {
    Int count = tight_count(cf);
    StepBudget budget("enumerate_tight");
    budget.charge(count.convert_to<std::uint64_t>());
    std::vector<RotationVector> out;
    RotationVector cur(cf.size());
    // odometer, leftmost coordinate slowest, each r_i ascending by 2
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cf.size()) {
            out.push_back(cur);
            return;
        }
        for (Int v = -(cf[i] - 2); v <= cf[i] - 2; v += 2) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

TightClass classify(const std::vector<Int>& cf, const RotationVector& r) {
    require_rotation_valid(cf, r);
    bool all_plus = true, all_minus = true;
    for (size_t i = 0; i < cf.size(); ++i) {
        if (r[i] != cf[i] - 2) all_plus = false;
        if (r[i] != -(cf[i] - 2)) all_minus = false;
    }
    return (all_plus || all_minus) ? TightClass::UniversallyTight
                                   : TightClass::VirtuallyOvertwisted;
}

std::vector<std::vector<RotationVector>> contactomorphism_classes(const std::vector<Int>& cf) {
    std::set<std::vector<RotationVector>> orbits;
    for (const RotationVector& r : enumerate_tight(cf)) {
        RotationVector neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        std::vector<RotationVector> orbit{r, neg};
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        orbits.insert(orbit);
    }
    return {orbits.begin(), orbits.end()};
}

BlockDecomposition honda_blocks(const LensSpace& l) {
    BlockDecomposition d;
    d.cf = neg_cf_expand(l);
    std::vector<Int> mu = meridian_coords(d.cf);
    for (size_t i = 0; i < d.cf.size(); ++i)
        d.blocks.push_back({i, d.cf[i] - 2, mu[i]});

    // exact coefficient-decrement walk down to [1]
    d.slopes.push_back({l.q, l.p});
    std::vector<Int> work = d.cf;
    StepBudget budget("honda_blocks");
    while (!(work.size() == 1 && work[0] == 1)) {
        budget.charge();
        work.back() -= 1;
        while (work.size() > 1 && work.back() == 1) { // contraction [...,b,1] = [...,b-1]
            work.pop_back();
            work.back() -= 1;
        }
        Fraction v = cf_evaluate(work);
        d.slopes.push_back({v.den, v.num});
    }

    // intervals between consecutive slopes; the first one is the attaching
    // region of the lower standard torus, the rest are the basic slices,
    // attached to coefficients from the last to the first
    size_t idx = 1;
    for (size_t bi = d.cf.size(); bi-- > 0;) {
        Int count = d.cf[bi] - 2;
        for (Int s = 0; s < count; ++s) {
            d.slices.push_back({idx, idx + 1, bi});
            ++idx;
        }
    }
    if (idx + 1 != d.slopes.size())
        throw inconsistency_error("block decomposition slice count mismatch");
    return d;
}

RotationVector signs_to_rotation(const BlockDecomposition& d, const std::string& signs) {
    std::vector<std::string> groups;
    groups.emplace_back();
    for (char c : signs) {
        if (c == '|') groups.emplace_back();
        else if (c == '+' || c == '-') groups.back().push_back(c);
        else throw invalid_input_error("sign string may contain only '+', '-' and '|'");
    }
    if (groups.size() != d.blocks.size())
        throw invalid_input_error("sign string has wrong number of blocks");
    RotationVector r(d.blocks.size());
    for (size_t i = 0; i < groups.size(); ++i) {
        if (Int(groups[i].size()) != d.blocks[i].slice_count)
            throw invalid_input_error("sign group length does not match block slice count");
        Int excess = 0;
        for (char c : groups[i]) excess += (c == '+') ? 1 : -1;
        r[i] = excess;
    }
    return r;
}

std::string rotation_to_signs(const BlockDecomposition& d, const RotationVector& r) {
    require_rotation_valid(d.cf, r);
    std::string out;
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        if (i > 0) out.push_back('|');
        Int count = d.blocks[i].slice_count;
        Int plus = (count + r[i]) / 2;
        Int minus = count - plus;
        for (Int k = 0; k < plus; ++k) out.push_back('+');
        for (Int k = 0; k < minus; ++k) out.push_back('-');
    }
    return out;
}

} // namespace lenscape
