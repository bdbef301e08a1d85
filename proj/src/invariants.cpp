#include "lenscape/invariants.hpp"

#include <set>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"
#include "lenscape/tight.hpp"

namespace lenscape {

using boost::multiprecision::abs;

std::vector<Int> meridian_coords(const std::vector<Int>& cf) {
    if (cf.empty()) throw invalid_input_error("empty chain");
    for (const Int& a : cf)
        if (a < 2) throw invalid_input_error("chain coefficients must be >= 2");
    std::vector<Int> mu;
    mu.reserve(cf.size());
    mu.push_back(1);
    if (cf.size() > 1) mu.push_back(cf[0]);
    for (size_t i = 2; i < cf.size(); ++i)
        mu.push_back(cf[i - 1] * mu[i - 1] - mu[i - 2]);
    return mu;
}

PdEulerClass pd_euler_class(const std::vector<Int>& cf, const std::vector<Int>& r) {
    require_rotation_valid(cf, r);
    std::vector<Int> mu = meridian_coords(cf);
    Int s = 0;
    for (size_t i = 0; i < cf.size(); ++i) s += r[i] * mu[i];
    Int p = abs(chain_determinant(cf));
    if (abs(s) >= p) throw inconsistency_error("euler class sum escaped (-p, p)");
    return {s, mod_nonneg(s, p)};
}

bool c1_is_zero(const std::vector<Int>& cf, const std::vector<Int>& r) {
    PdEulerClass pd = pd_euler_class(cf, r);
    bool zero_sum = (pd.unreduced == 0);
    bool zero_vec = true;
    for (const Int& v : r)
        if (v != 0) { zero_vec = false; break; }
    if (zero_sum != zero_vec)
        throw inconsistency_error("euler class vanishing disagrees with r = 0");
    return zero_sum;
}

Fraction c1_squared(const IntMatrix& q, const std::vector<Int>& x) {
    if (!q.is_symmetric()) throw invalid_input_error("intersection form must be symmetric");
    return quadratic_form_inverse(q, x);
}

Fraction c1_squared_chain(const std::vector<Int>& cf, const std::vector<Int>& r) {
    if (cf.size() != r.size()) throw invalid_input_error("rotation vector length mismatch");
    return c1_squared(linking_matrix(cf), r);
}

Fraction d3_invariant(const IntMatrix& q, const std::vector<Int>& x, const Int& sigma, const Int& chi) {
    Fraction c2 = c1_squared(q, x);
    return (c2 - Fraction(3 * sigma) - Fraction(2 * chi)) / Fraction(Int(4));
}

Fraction d3_chain(const std::vector<Int>& cf, const std::vector<Int>& r) {
    Int n = Int(cf.size());
    return d3_invariant(linking_matrix(cf), r, -n, 1 + n);
}

std::optional<Int> chi_from_d3(const Fraction& d3) {
    Fraction chi = Fraction(Int(4)) * d3 + Fraction(Int(3));
    if (!chi.is_integer() || chi.num < 1) return std::nullopt;
    return chi.num;
}

RationalBallReport rational_ball_obstruction(const std::vector<Int>& cf, const std::vector<Int>& r) {
    if (cf.size() != r.size()) throw invalid_input_error("rotation vector length mismatch");
    for (const Int& a : cf)
        if (a < 2) throw invalid_input_error("chain coefficients must be >= 2");
    IntMatrix q = linking_matrix(cf);
    std::vector<Int> y;
    y.reserve(cf.size());
    for (const Int& a : cf) y.push_back(a - 2);
    RationalBallReport rep{BallVerdict::Possible,
                           quadratic_form_inverse(q, r),
                           quadratic_form_inverse(q, y),
                           d3_chain(cf, r),
                           false,
                           false};
    rep.concavity_fired = rep.f_y < rep.f_r;
    rep.d3_fired = rep.d3 != Fraction(Int(-1), Int(2));
    rep.verdict = (rep.concavity_fired || rep.d3_fired) ? BallVerdict::Obstructed
                                                        : BallVerdict::Possible;
    return rep;
}

bool verify_concavity(const std::vector<Int>& cf) {
    Int count = tight_count(cf);
    StepBudget budget("verify_concavity");
    if (search_limits().gates_enabled && count > 1'000'000)
        throw resource_limit_error("verify_concavity: too many rotation vectors");
    IntMatrix q = linking_matrix(cf);
    RationalMatrix inv = exact_inverse(q);
    auto f = [&](const RotationVector& x) {
        Fraction total(Int(0));
        for (int i = 0; i < q.rows; ++i) {
            Fraction row(Int(0));
            for (int j = 0; j < q.cols; ++j)
                row = row + inv.at(i, j) * Fraction(x[static_cast<size_t>(j)]);
            total = total + Fraction(x[static_cast<size_t>(i)]) * row;
        }
        return total;
    };
    RotationVector y;
    for (const Int& a : cf) y.push_back(a - 2);
    Fraction fy = f(y);
    std::set<RotationVector> argmin;
    Fraction best = fy;
    for (const RotationVector& x : enumerate_tight(cf)) {
        budget.charge();
        Fraction fx = f(x);
        if (fx < best) { best = fx; argmin.clear(); }
        if (fx == best) argmin.insert(x);
    }
    RotationVector neg_y;
    for (const Int& v : y) neg_y.push_back(-v);
    std::set<RotationVector> expected{y, neg_y};
    return best == fy && argmin == expected;
}

} // namespace lenscape
