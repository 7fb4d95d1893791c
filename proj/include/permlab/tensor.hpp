#ifndef PERMLAB_TENSOR_HPP
#define PERMLAB_TENSOR_HPP

#include <vector>

#include "permlab/matrix.hpp"

namespace permlab {

/// Structure constants of a binary multiplication:
/// e_i o e_j = sum_k c(i,j,k) e_k.
struct MulTensor {
    int dim = 0;
    std::vector<Scalar> c;

    MulTensor() = default;
    explicit MulTensor(int d) : dim(d), c(size_t(d) * d * d) {}

    Scalar& at(int i, int j, int k) { return c[(size_t(i) * dim + j) * dim + k]; }
    const Scalar& at(int i, int j, int k) const { return c[(size_t(i) * dim + j) * dim + k]; }

    friend bool operator==(const MulTensor& a, const MulTensor& b) {
        return a.dim == b.dim && a.c == b.c;
    }
    friend bool operator!=(const MulTensor& a, const MulTensor& b) { return !(a == b); }
    bool is_zero() const;
};

/// Structure constants of a comultiplication:
/// D(e_i) = sum_{j,k} d(i,j,k) e_j (x) e_k.
struct ComulTensor {
    int dim = 0;
    std::vector<Scalar> d;

    ComulTensor() = default;
    explicit ComulTensor(int n) : dim(n), d(size_t(n) * n * n) {}

    Scalar& at(int i, int j, int k) { return d[(size_t(i) * dim + j) * dim + k]; }
    const Scalar& at(int i, int j, int k) const { return d[(size_t(i) * dim + j) * dim + k]; }

    friend bool operator==(const ComulTensor& a, const ComulTensor& b) {
        return a.dim == b.dim && a.d == b.d;
    }
    friend bool operator!=(const ComulTensor& a, const ComulTensor& b) { return !(a == b); }
    bool is_zero() const;
};

MulTensor tensor_add(const MulTensor& a, const MulTensor& b);
MulTensor tensor_sub(const MulTensor& a, const MulTensor& b);
MulTensor tensor_scaled(const MulTensor& a, const Scalar& c);
MulTensor tensor_swap_args(const MulTensor& a);  ///< (i,j,k) -> (j,i,k)

/// e_i o e_j as a coordinate vector.
Vec prod(const MulTensor& t, int i, int j);
/// e_i o y.
Vec apply_left(const MulTensor& t, int i, const Vec& y);
/// x o e_j.
Vec apply_right(const MulTensor& t, const Vec& x, int j);
/// x o y, full bilinear contraction.
Vec apply(const MulTensor& t, const Vec& x, const Vec& y);

/// Left/right multiplication operator by e_i as a matrix.
Matrix left_mult_matrix(const MulTensor& t, int i);
Matrix right_mult_matrix(const MulTensor& t, int i);
/// Multiplication operator by an arbitrary element.
Matrix left_mult_matrix(const MulTensor& t, const Vec& x);

/// Order-2 tensor (element of A (x) A) as a dim x dim coefficient grid.
using Grid = Matrix;

/// D(e_i) as a grid.
Grid comul_of_basis(const ComulTensor& t, int i);
/// D(x) for an arbitrary element.
Grid comul_apply(const ComulTensor& t, const Vec& x);

}  // namespace permlab

#endif
