#ifndef PERMLAB_TESTS_SUPPORT_HPP
#define PERMLAB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "permlab/construct.hpp"

// Deterministic generators for algebras, operators and forms used across
// the test and acceptance suites.
namespace permlab::testgen {

using Rng = std::mt19937_64;

inline Scalar small_scalar(Rng& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Scalar(d(rng));
}

inline Vec random_vec(Rng& rng, int dim, int lo = -3, int hi = 3) {
    Vec v(dim);
    for (auto& x : v) x = small_scalar(rng, lo, hi);
    return v;
}

inline Matrix random_matrix(Rng& rng, int rows, int cols, int lo = -3, int hi = 3) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = small_scalar(rng, lo, hi);
    return m;
}

inline Matrix random_invertible(Rng& rng, int n) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, -2, 2);
        if (invert(m)) return m;
    }
}

// Pointwise product algebra K^n: e_i . e_j = delta_ij e_i.
inline MulTensor diag_mult(int n) {
    MulTensor t(n);
    for (int i = 0; i < n; ++i) t.at(i, i, i) = Scalar(1);
    return t;
}

// Truncated polynomials K[t]/(t^n) with e_i = t^(i-1).
inline MulTensor truncated_poly_mult(int n) {
    MulTensor t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) t.at(i, j, i + j) = Scalar(1);
    return t;
}

// Conjugates a multiplication by an invertible base change:
// x .' y = S^-1 (Sx . Sy). Preserves every multilinear identity.
inline MulTensor conjugate_mult(const MulTensor& t, const Matrix& s) {
    const Matrix s_inv = *invert(s);
    MulTensor out(t.dim);
    for (int i = 0; i < t.dim; ++i) {
        const Vec si = s.apply(basis_vec(t.dim, i));
        for (int j = 0; j < t.dim; ++j) {
            const Vec v = s_inv.apply(apply(t, si, s.apply(basis_vec(t.dim, j))));
            for (int k = 0; k < t.dim; ++k) out.at(i, j, k) = v[k];
        }
    }
    return out;
}

inline Matrix conjugate_operator(const Matrix& p, const Matrix& s) {
    return *invert(s) * p * s;
}

// Left multiplication by a fixed element; always an averaging operator on
// a commutative associative algebra.
inline Matrix mult_operator(const MulTensor& t, const Vec& a) {
    return left_mult_matrix(t, a);
}

// A commutative associative algebra together with an averaging operator
// and an admissible partner.
struct AvgAlgebra {
    Algebra algebra;       // mult "dot"
    Matrix P, Q;
};

// Deterministic family of admissible averaging algebras on dims 1..4.
inline std::vector<AvgAlgebra> admissible_family(Rng& rng, int count) {
    std::vector<AvgAlgebra> out;
    int made = 0;
    while (made < count) {
        const int dim = 1 + int(rng() % 4);
        const int flavor = int(rng() % 3);
        MulTensor t = flavor == 0 ? diag_mult(dim) : truncated_poly_mult(dim);
        if (flavor == 2) t = conjugate_mult(diag_mult(dim), random_invertible(rng, dim));

        Matrix p, q;
        if (rng() % 2 == 0) {
            // multiplication operators: P = L_a, Q = L_b with b in {0, a}
            const Vec a = random_vec(rng, dim, -2, 2);
            p = mult_operator(t, a);
            q = rng() % 2 == 0 ? Matrix::zero(dim, dim) : p;
        } else if (flavor == 0) {
            // on the pointwise algebra: diagonal P, Q with q_i in {0, p_i}
            Vec dp(dim), dq(dim);
            for (int i = 0; i < dim; ++i) {
                dp[i] = small_scalar(rng, -2, 2);
                dq[i] = rng() % 2 == 0 ? Scalar(0) : dp[i];
            }
            p = Matrix::diagonal(dp);
            q = Matrix::diagonal(dq);
        } else {
            p = mult_operator(t, random_vec(rng, dim, -2, 2));
            q = Matrix::zero(dim, dim);
        }

        AvgAlgebra entry{make_algebra(dim, {}, {{"dot", std::move(t)}}), std::move(p),
                         std::move(q)};
        if (!check_admissible(entry.algebra, "dot", entry.P, entry.Q).passed) continue;
        out.push_back(std::move(entry));
        ++made;
    }
    return out;
}

// Bumps one structure-constant (or matrix) entry by 1; used for mutation
// tests.
inline MulTensor bump(MulTensor t, int i, int j, int k) {
    t.at(i, j, k) += Scalar(1);
    return t;
}

inline Matrix bump(Matrix m, int i, int j) {
    m.at(i, j) += Scalar(1);
    return m;
}

// Basis of the space of bilinear forms satisfying the extended
// left-invariance law B(x o y, z) = B(y, x o z + z o x) - B(x, z o y)
// on the given perm product. Unknowns are the gram entries.
inline std::vector<Matrix> left_inv1_form_space(const MulTensor& t) {
    const int n = t.dim;
    Matrix sys(n * n * n, n * n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // sum_m c(i,j,m) G(m,k) - sum_m (c(i,k,m)+c(k,i,m)) G(j,m)
                //   + sum_m c(k,j,m) G(i,m) = 0
                for (int m = 0; m < n; ++m) {
                    sys.at(row, m * n + k) += t.at(i, j, m);
                    sys.at(row, j * n + m) -= t.at(i, k, m) + t.at(k, i, m);
                    sys.at(row, i * n + m) += t.at(k, j, m);
                }
                ++row;
            }
    auto sol = solve_linear(sys, Vec(sys.rows()));
    std::vector<Matrix> basis;
    for (const auto& v : sol.nullspace) {
        Matrix g(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) g.at(p, q) = v[size_t(p) * n + q];
        basis.push_back(std::move(g));
    }
    return basis;
}

// Deterministic stream of nondegenerate forms from a solution-space basis.
inline std::vector<Matrix> nondegenerate_combos(const std::vector<Matrix>& basis, Rng& rng,
                                                int want) {
    std::vector<Matrix> out;
    if (basis.empty()) return out;
    const int n = basis.front().rows();
    int guard = 0;
    while (int(out.size()) < want && guard++ < 10000) {
        Matrix g(n, n);
        for (const auto& b : basis) g = g + b.scaled(small_scalar(rng, -2, 2));
        if (!determinant(g).is_zero()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace permlab::testgen

#endif
