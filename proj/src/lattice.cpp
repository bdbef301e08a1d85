#include "lenscape/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lenscape/config.hpp"
#include "lenscape/errors.hpp"

namespace lenscape {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw invalid_input_error("matrix product shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

// Bareiss fraction-free elimination
Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw invalid_input_error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

RationalMatrix exact_inverse(const IntMatrix& m) {
    if (m.rows != m.cols) throw invalid_input_error("inverse of non-square matrix");
    int n = m.rows;
    RationalMatrix a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = Fraction(m.at(i, j));
        a.at(i, n + i) = Fraction(Int(1));
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col).num != 0) { piv = i; break; }
        if (piv < 0) throw invalid_input_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(a.at(col, j), a.at(piv, j));
        Fraction inv_p = a.at(col, col).reciprocal();
        for (int j = 0; j < 2 * n; ++j) a.at(col, j) = a.at(col, j) * inv_p;
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).num == 0) continue;
            Fraction f = a.at(i, col);
            for (int j = 0; j < 2 * n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = a.at(i, n + j);
    return inv;
}

Fraction quadratic_form_inverse(const IntMatrix& q, const std::vector<Int>& x) {
    if (q.rows != q.cols || static_cast<size_t>(q.rows) != x.size())
        throw invalid_input_error("quadratic form dimension mismatch");
    RationalMatrix inv = exact_inverse(q);
    Fraction total(Int(0));
    for (int i = 0; i < q.rows; ++i) {
        Fraction row_sum(Int(0));
        for (int j = 0; j < q.cols; ++j)
            row_sum = row_sum + inv.at(i, j) * Fraction(x[static_cast<size_t>(j)]);
        total = total + Fraction(x[static_cast<size_t>(i)]) * row_sum;
    }
    return total;
}

IntMatrix linking_matrix(const std::vector<Int>& cf) {
    if (cf.empty()) throw invalid_input_error("empty chain");
    int n = static_cast<int>(cf.size());
    IntMatrix q(n, n);
    for (int i = 0; i < n; ++i) {
        q.at(i, i) = -cf[static_cast<size_t>(i)];
        if (i + 1 < n) {
            q.at(i, i + 1) = 1;
            q.at(i + 1, i) = 1;
        }
    }
    return q;
}

std::vector<Int> chain_determinants(const std::vector<Int>& cf) {
    std::vector<Int> d;
    d.reserve(cf.size() + 1);
    Int prev2 = 0, prev1 = 1; // D_{-1}, D_0
    d.push_back(prev1);
    for (const Int& a : cf) {
        Int cur = -a * prev1 - prev2;
        d.push_back(cur);
        prev2 = prev1;
        prev1 = cur;
    }
    return d;
}

Int chain_determinant(const std::vector<Int>& cf) {
    return chain_determinants(cf).back();
}

namespace {

Int floor_div(const Int& num, const Int& den) { // den > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

Int fraction_floor(const Fraction& f) { return floor_div(f.num, f.den); }

struct Ldl {
    std::vector<Fraction> d;      // diagonal, all > 0 iff positive definite
    RationalMatrix l;             // unit lower triangular
    bool positive_definite = false;
};

Ldl ldl_decompose(const IntMatrix& m) {
    if (!m.is_symmetric()) throw invalid_input_error("LDL^T requires a symmetric matrix");
    int n = m.rows;
    Ldl out;
    out.d.assign(static_cast<size_t>(n), Fraction(Int(0)));
    out.l = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i) out.l.at(i, i) = Fraction(Int(1));
    for (int i = 0; i < n; ++i) {
        Fraction di = Fraction(m.at(i, i));
        for (int k = 0; k < i; ++k)
            di = di - out.l.at(i, k) * out.l.at(i, k) * out.d[static_cast<size_t>(k)];
        out.d[static_cast<size_t>(i)] = di;
        if (di.num <= 0) return out; // not positive definite, leave flag false
        for (int j = i + 1; j < n; ++j) {
            Fraction v = Fraction(m.at(j, i));
            for (int k = 0; k < i; ++k)
                v = v - out.l.at(j, k) * out.l.at(i, k) * out.d[static_cast<size_t>(k)];
            out.l.at(j, i) = v / di;
        }
    }
    out.positive_definite = true;
    return out;
}

} // namespace

bool is_positive_definite(const IntMatrix& m) { return ldl_decompose(m).positive_definite; }

bool is_negative_definite(const IntMatrix& m) {
    IntMatrix neg = m;
    for (Int& v : neg.a) v = -v;
    return is_positive_definite(neg);
}

std::vector<ShortVector> short_vectors(const IntMatrix& p, const Int& bound) {
    int n = p.rows;
    if (n == 0) return {};
    Ldl ldl = ldl_decompose(p);
    if (!ldl.positive_definite)
        throw invalid_input_error("short vector enumeration requires a positive definite form");
    StepBudget budget("short_vectors");
    std::vector<ShortVector> out;
    std::vector<Int> x(static_cast<size_t>(n), Int(0));
    Fraction bound_f((Int(bound)));

    // levels run i = n-1 .. 0; used = sum_{k>i} d_k (x_k + c_k)^2
    auto center = [&](int i) {
        Fraction c(Int(0));
        for (int j = i + 1; j < n; ++j)
            c = c + ldl.l.at(j, i) * Fraction(x[static_cast<size_t>(j)]);
        return c;
    };

    std::function<void(int, Fraction)> rec = [&](int i, Fraction used) {
        budget.charge();
        if (i < 0) {
            bool all_zero = true;
            int first_nonzero_sign = 0;
            for (const Int& v : x)
                if (v != 0) { all_zero = false; first_nonzero_sign = (v > 0) ? 1 : -1; break; }
            if (all_zero || first_nonzero_sign < 0) return; // one representative per +-pair
            Int norm = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) norm += x[static_cast<size_t>(r)] * p.at(r, c) * x[static_cast<size_t>(c)];
            out.push_back({x, norm});
            return;
        }
        Fraction rem = bound_f - used;
        if (rem.num < 0) return;
        const Fraction& di = ldl.d[static_cast<size_t>(i)];
        Fraction ci = center(i);
        Fraction radius_sq = rem / di;
        Int m = sqrt(fraction_floor(radius_sq)) + 1;
        Int lo = fraction_floor(-ci) - m;
        Int hi = fraction_floor(-ci) + m + 1;
        for (Int t = lo; t <= hi; ++t) {
            budget.charge();
            Fraction y = Fraction(t) + ci;
            Fraction cost = di * y * y;
            if (bound_f < used + cost) continue;
            x[static_cast<size_t>(i)] = t;
            rec(i - 1, used + cost);
        }
        x[static_cast<size_t>(i)] = 0;
    };
    rec(n - 1, Fraction(Int(0)));

    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.x < b.x;
    });
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    // row-reduce m^T with unimodular ops; kernel rows = transform rows at zero rows
    int t = m.cols, r = m.rows;
    IntMatrix a = m.transposed(); // t x r
    IntMatrix u = IntMatrix::identity(t);
    auto swap_rows = [&](IntMatrix& mm, int i, int j) {
        for (int c = 0; c < mm.cols; ++c) std::swap(mm.at(i, c), mm.at(j, c));
    };
    auto addmul_row = [&](IntMatrix& mm, int dst, int src, const Int& f) {
        for (int c = 0; c < mm.cols; ++c) mm.at(dst, c) += f * mm.at(src, c);
    };
    int pivot = 0;
    for (int col = 0; col < r && pivot < t; ++col) {
        while (true) {
            int best = -1;
            for (int i = pivot; i < t; ++i) {
                if (a.at(i, col) == 0) continue;
                if (best < 0 || abs(a.at(i, col)) < abs(a.at(best, col))) best = i;
            }
            if (best < 0) break;
            if (best != pivot) { swap_rows(a, pivot, best); swap_rows(u, pivot, best); }
            bool clean = true;
            for (int i = pivot + 1; i < t; ++i) {
                if (a.at(i, col) == 0) continue;
                Int f = -(a.at(i, col) / a.at(pivot, col));
                addmul_row(a, i, pivot, f);
                addmul_row(u, i, pivot, f);
                if (a.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(pivot, col) != 0) ++pivot;
    }
    IntMatrix kernel(t - pivot, t);
    for (int i = pivot; i < t; ++i)
        for (int c = 0; c < t; ++c) kernel.at(i - pivot, c) = u.at(i, c);
    // deterministic presentation: sign-normalize rows and sort
    for (int i = 0; i < kernel.rows; ++i) {
        for (int c = 0; c < t; ++c) {
            if (kernel.at(i, c) == 0) continue;
            if (kernel.at(i, c) < 0)
                for (int cc = 0; cc < t; ++cc) kernel.at(i, cc) = -kernel.at(i, cc);
            break;
        }
    }
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < kernel.rows; ++i)
        rows.emplace_back(kernel.a.begin() + static_cast<long>(i) * t,
                          kernel.a.begin() + static_cast<long>(i + 1) * t);
    std::sort(rows.begin(), rows.end());
    for (int i = 0; i < kernel.rows; ++i)
        std::copy(rows[static_cast<size_t>(i)].begin(), rows[static_cast<size_t>(i)].end(),
                  kernel.a.begin() + static_cast<long>(i) * t);
    return kernel;
}

LinearPlumbing plumbing_from_cf(const std::vector<Int>& cf) {
    LinearPlumbing p;
    p.weights.reserve(cf.size());
    for (const Int& a : cf) {
        if (a < 2) throw invalid_input_error("chain coefficients must be >= 2");
        p.weights.push_back(-a);
    }
    return p;
}

IntMatrix plumbing_form(const LinearPlumbing& p) {
    std::vector<Int> cf;
    cf.reserve(p.weights.size());
    for (const Int& w : p.weights) {
        if (w > -2) throw invalid_input_error("plumbing weights must be <= -2");
        cf.push_back(-w);
    }
    return linking_matrix(cf);
}

DiagonalEmbedding max_irreducible_embedding(const LinearPlumbing& p) {
    size_t k = p.weights.size();
    if (k == 0) throw invalid_input_error("empty plumbing");
    for (size_t i = 0; i < k; ++i) {
        if (p.weights[i] > -2) throw invalid_input_error("plumbing weights must be <= -2");
        Int degree = (k == 1) ? 0 : ((i == 0 || i + 1 == k) ? 1 : 2);
        if (p.weights[i] + degree > 0)
            throw invalid_input_error("bad vertex: weight + degree > 0, unsupported graph");
    }
    DiagonalEmbedding e;
    Int rank = 1;
    for (const Int& w : p.weights) rank += (-w) - 1;
    e.ambient_rank = static_cast<int>(rank);
    e.images.resize(k);
    int next_fresh = 0;
    int prev_last = -1;
    for (size_t i = 0; i < k; ++i) {
        int size = static_cast<int>(-p.weights[i]);
        int sign = (i % 2 == 0) ? 1 : -1;
        auto& img = e.images[i];
        int fresh_needed = size;
        if (i > 0) {
            img.emplace_back(prev_last, sign); // shared with the previous vertex, opposite sign
            fresh_needed -= 1;
        }
        for (int f = 0; f < fresh_needed; ++f) img.emplace_back(next_fresh++, sign);
        prev_last = img.back().first;
    }
    return e;
}

IntMatrix embedding_matrix(const DiagonalEmbedding& e) {
    IntMatrix m(static_cast<int>(e.images.size()), e.ambient_rank);
    for (size_t i = 0; i < e.images.size(); ++i)
        for (const auto& [idx, sign] : e.images[i]) {
            if (idx < 0 || idx >= e.ambient_rank)
                throw invalid_input_error("embedding image index out of range");
            m.at(static_cast<int>(i), idx) = sign;
        }
    return m;
}

IntMatrix embedding_gram(const DiagonalEmbedding& e) {
    IntMatrix m = embedding_matrix(e);
    IntMatrix g = mat_mul(m, m.transposed());
    for (Int& v : g.a) v = -v; // ambient form is <-1>^t
    return g;
}

ComplementReport orthogonal_complement(const DiagonalEmbedding& e) {
    ComplementReport rep;
    rep.basis = integer_kernel(embedding_matrix(e));
    IntMatrix g = mat_mul(rep.basis, rep.basis.transposed());
    for (Int& v : g.a) v = -v;
    rep.gram = g;
    rep.det = determinant(g);
    rep.negative_definite = (g.rows == 0) || is_negative_definite(g);
    if (g.rows > 0 && rep.negative_definite) {
        IntMatrix pos = g;
        for (Int& v : pos.a) v = -v;
        for (const ShortVector& sv : short_vectors(pos, Int(1)))
            if (sv.norm == 1) { rep.has_minus_one_vector = true; break; }
    }
    return rep;
}

Int chi_upper_bound(const LensSpace& l) {
    return Int(1) + cf_length_of(l.p, l.q);
}

namespace {

// all v in Z^rank with standard norm exactly `norm`, deterministic order
void gen_norm_vectors(int rank, const Int& norm, std::vector<std::vector<Int>>& out,
                      std::vector<Int>& cur, int pos, const Int& rem, StepBudget& budget) {
    budget.charge();
    if (pos == rank) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    Int root = sqrt(rem);
    for (Int v = -root; v <= root; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        gen_norm_vectors(rank, norm, out, cur, pos + 1, rem - v * v, budget);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

IntMatrix canonical_signed_permutation(const IntMatrix& m) {
    // columns: flip so the topmost nonzero entry is positive, then sort descending
    std::vector<std::vector<Int>> cols(static_cast<size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c) {
        std::vector<Int> col(static_cast<size_t>(m.rows));
        int sign = 0;
        for (int r = 0; r < m.rows; ++r) {
            col[static_cast<size_t>(r)] = m.at(r, c);
            if (sign == 0 && col[static_cast<size_t>(r)] != 0)
                sign = (col[static_cast<size_t>(r)] > 0) ? 1 : -1;
        }
        if (sign < 0)
            for (Int& v : col) v = -v;
        cols[static_cast<size_t>(c)] = std::move(col);
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    IntMatrix canon(m.rows, m.cols);
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) canon.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return canon;
}

} // namespace

OracleResult embedding_oracle(const LinearPlumbing& p, int rank) {
    size_t k = p.weights.size();
    if (k == 0 || rank <= 0) throw invalid_input_error("embedding oracle needs a chain and a positive rank");
    Int total_weight = 0;
    for (const Int& w : p.weights) {
        if (w > -2) throw invalid_input_error("plumbing weights must be <= -2");
        total_weight += -w;
    }
    if (search_limits().gates_enabled) {
        if (k > 5 || total_weight > 14 || rank > 16)
            throw resource_limit_error("embedding_oracle: instance beyond desk scale");
    }
    StepBudget budget("embedding_oracle");

    std::vector<std::vector<std::vector<Int>>> candidates(k);
    for (size_t i = 0; i < k; ++i) {
        std::vector<Int> cur(static_cast<size_t>(rank), Int(0));
        gen_norm_vectors(rank, -p.weights[i], candidates[i], cur, 0, -p.weights[i], budget);
    }

    auto dot = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    std::set<IntMatrix> seen;
    std::vector<const std::vector<Int>*> chosen(k, nullptr);
    std::function<void(size_t)> rec = [&](size_t level) {
        if (level == k) {
            IntMatrix m(static_cast<int>(k), rank);
            for (size_t i = 0; i < k; ++i)
                for (int c = 0; c < rank; ++c) m.at(static_cast<int>(i), c) = (*chosen[i])[static_cast<size_t>(c)];
            seen.insert(canonical_signed_permutation(m));
            return;
        }
        for (const auto& cand : candidates[level]) {
            budget.charge();
            bool ok = true;
            for (size_t j = 0; j < level && ok; ++j) {
                Int want = (j + 1 == level) ? Int(-1) : Int(0); // gram +1 on edges under <-1>
                if (dot(*chosen[j], cand) != want) ok = false;
            }
            if (!ok) continue;
            chosen[level] = &cand;
            rec(level + 1);
            chosen[level] = nullptr;
        }
    };
    rec(0);

    OracleResult res;
    for (const IntMatrix& m : seen) {
        bool irreducible = true;
        for (int c = 0; c < m.cols && irreducible; ++c) {
            bool nonzero = false;
            for (int r = 0; r < m.rows; ++r)
                if (m.at(r, c) != 0) { nonzero = true; break; }
            if (!nonzero) irreducible = false;
        }
        res.classes.push_back({m, irreducible});
        if (irreducible) ++res.irreducible_count;
    }
    return res;
}

IntMatrix gauss_reduced_binary(const IntMatrix& g) {
    if (g.rows != 2 || g.cols != 2 || !g.is_symmetric())
        throw invalid_input_error("binary form reduction needs a symmetric 2x2 matrix");
    if (!is_negative_definite(g))
        throw invalid_input_error("binary form reduction implemented for negative definite forms");
    Int a = -g.at(0, 0), b = -g.at(0, 1), c = -g.at(1, 1);
    while (true) {
        if (a > c) { std::swap(a, c); }
        if (2 * abs(b) <= a) break;
        // translate: y -> y - k x with k nearest to b/a
        Int k = floor_div(2 * b + a, 2 * a);
        c = c - 2 * k * b + k * k * a;
        b = b - k * a;
    }
    if (b < 0) b = -b; // GL2 classes: sign of b is not an invariant
    IntMatrix out(2, 2);
    out.at(0, 0) = -a;
    out.at(0, 1) = b;
    out.at(1, 0) = b;
    out.at(1, 1) = -c;
    return out;
}

FormComparison compare_forms(const IntMatrix& g1, const IntMatrix& g2) {
    if (!g1.is_symmetric() || !g2.is_symmetric())
        throw invalid_input_error("form comparison needs symmetric matrices");
    if (g1.rows != g2.rows) return {FormVerdict::Distinguished, "ranks differ"};
    int n = g1.rows;
    if (n == 0) return {FormVerdict::Isomorphic, "both trivial"};
    bool nd1 = is_negative_definite(g1), nd2 = is_negative_definite(g2);
    if (nd1 != nd2) return {FormVerdict::Distinguished, "definiteness differs"};
    if (!nd1) return {FormVerdict::Inconclusive, "comparison implemented for negative definite forms"};
    Int d1 = determinant(g1), d2 = determinant(g2);
    if (d1 != d2) return {FormVerdict::Distinguished, "determinants differ"};
    if (n == 1) return {FormVerdict::Isomorphic, "equal rank-1 forms"};
    if (n == 2) {
        IntMatrix r1 = gauss_reduced_binary(g1), r2 = gauss_reduced_binary(g2);
        if (r1 == r2) return {FormVerdict::Isomorphic, "identical Gauss-reduced forms"};
        return {FormVerdict::Distinguished, "Gauss-reduced forms differ"};
    }
    // rank >= 3: invariant comparison only
    IntMatrix p1 = g1, p2 = g2;
    for (Int& v : p1.a) v = -v;
    for (Int& v : p2.a) v = -v;
    auto histogram = [](const IntMatrix& p) {
        std::vector<Int> h(5, Int(0)); // counts of vectors with norm 1..4
        for (const ShortVector& sv : short_vectors(p, Int(4)))
            h[static_cast<size_t>(sv.norm.convert_to<int>())] += 1;
        return h;
    };
    if (histogram(p1) != histogram(p2))
        return {FormVerdict::Distinguished, "short-vector counts differ"};
    return {FormVerdict::Inconclusive, "all compared invariants agree (rank >= 3)"};
}

} // namespace lenscape
