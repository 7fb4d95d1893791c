#ifndef PERMLAB_LINALG_HPP
#define PERMLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab {

/// Full description of the affine solution set of a linear system.
struct LinearSolution {
    bool consistent = false;
    Vec particular;                  ///< one solution (when consistent)
    std::vector<Vec> nullspace;      ///< basis of the homogeneous solutions
};

/// Exact row reduction of coeffs * x = rhs.
LinearSolution solve_linear(const Matrix& coeffs, const Vec& rhs);

/// Exact inverse; empty when singular. Throws on non-square input.
std::optional<Matrix> invert(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Transpose of a square matrix, read as the dual map on the dual basis.
Matrix dual_map(const Matrix& m);

}  // namespace permlab

#endif
