// Intersection-form side: integral matrices, exact rational inverses, the
// tridiagonal chain form of a negative continued fraction, greedy maximal
// embeddings into diagonal <-1>^t lattices, orthogonal complements, and an
// exhaustive small-rank embedding oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lenscape/numbers.hpp"

namespace lenscape {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;
    bool is_symmetric() const;
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
        if (x.rows != y.rows) return x.rows < y.rows;
        if (x.cols != y.cols) return x.cols < y.cols;
        return x.a < y.a;
    }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
Int determinant(const IntMatrix& m); // Bareiss, exact

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Fraction> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Fraction& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Fraction& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// exact inverse via Gauss-Jordan; throws invalid_input_error on singular input
RationalMatrix exact_inverse(const IntMatrix& m);

// x^T Q^{-1} x for integer x (Q invertible symmetric)
Fraction quadratic_form_inverse(const IntMatrix& q, const std::vector<Int>& x);

// tridiagonal chain form: diag(-a1,...,-an), off-diagonal 1
IntMatrix linking_matrix(const std::vector<Int>& cf);

// determinant recursion D_{-1}=0, D_0=1, D_i = -a_i D_{i-1} - D_{i-2};
// returns D_0..D_n; D_n = +-p with sign (-1)^n
std::vector<Int> chain_determinants(const std::vector<Int>& cf);
Int chain_determinant(const std::vector<Int>& cf);

// definiteness of a symmetric integral form via exact LDL^T
bool is_positive_definite(const IntMatrix& m);
bool is_negative_definite(const IntMatrix& m);

// nonzero x with x^T P x <= bound for positive definite P, one per +-pair
// (first nonzero coordinate positive), sorted by (norm, lexicographic)
struct ShortVector {
    std::vector<Int> x;
    Int norm;
};
std::vector<ShortVector> short_vectors(const IntMatrix& p, const Int& bound);

// basis of { v in Z^t : M v = 0 } as rows; the kernel lattice is saturated
IntMatrix integer_kernel(const IntMatrix& m);

// linear plumbing chain, weights w_i <= -2
struct LinearPlumbing {
    std::vector<Int> weights;
};
LinearPlumbing plumbing_from_cf(const std::vector<Int>& cf); // weights -a_i
IntMatrix plumbing_form(const LinearPlumbing& p);

// vertex images inside <-1>^t as signed basis-index lists
struct DiagonalEmbedding {
    int ambient_rank = 0;
    std::vector<std::vector<std::pair<int, int>>> images; // (basis index, sign +-1)
};

// greedy maximal embedding: vertex i takes |w_i| distinct basis vectors, one
// shared (with opposite sign) with the previously embedded neighbor;
// t = 1 + sum(|w_i| - 1)
DiagonalEmbedding max_irreducible_embedding(const LinearPlumbing& p);

IntMatrix embedding_matrix(const DiagonalEmbedding& e); // k x t, row = image
IntMatrix embedding_gram(const DiagonalEmbedding& e);   // -(M M^T)

struct ComplementReport {
    IntMatrix basis; // rows span the orthogonal complement in Z^t
    IntMatrix gram;  // with respect to the ambient <-1> form
    bool negative_definite = false;
    Int det;                          // of gram
    bool has_minus_one_vector = false; // certified by short-vector enumeration
};
ComplementReport orthogonal_complement(const DiagonalEmbedding& e);

// Euler-characteristic bound for Stein fillings: chi <= 1 + length(p/q)
Int chi_upper_bound(const LensSpace& l);

// exhaustive embedding search at a fixed ambient rank, classes counted up to
// signed permutations of the coordinates (vertices stay labeled)
struct EmbeddingClass {
    IntMatrix images; // canonical representative, k x rank
    bool irreducible; // every ambient basis vector is hit
};
struct OracleResult {
    std::vector<EmbeddingClass> classes; // sorted by representative
    int irreducible_count = 0;
};
OracleResult embedding_oracle(const LinearPlumbing& p, int rank);

// Lagrange-Gauss canonical form of a definite binary form (GL2 classes);
// input and output are negative definite, reduced as 0 <= 2b <= a <= c on -G
IntMatrix gauss_reduced_binary(const IntMatrix& g);

enum class FormVerdict { Isomorphic, Distinguished, Inconclusive };
struct FormComparison {
    FormVerdict verdict;
    std::string note;
};
// certified for rank <= 2; rank >= 3 compares invariants only (det,
// definiteness, short-vector counts up to norm 4) and never certifies
// isomorphism
FormComparison compare_forms(const IntMatrix& g1, const IntMatrix& g2);

} // namespace lenscape
