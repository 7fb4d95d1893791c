#include "permlab/linalg.hpp"

#include <stdexcept>

namespace permlab {

namespace {

// Reduced row echelon form of an augmented block [a | b], in place.
// Returns the pivot column of each pivot row, restricted to columns of a.
std::vector<int> rref(Matrix& a, Matrix& b) {
    const int n = a.rows(), m = a.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(row, j));
        }
        Scalar inv = Scalar(1) / a.at(row, col);
        for (int j = col; j < m; ++j) a.at(row, j) *= inv;
        for (int j = 0; j < b.cols(); ++j) b.at(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            Scalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < m; ++j) a.at(i, j) -= f * a.at(row, j);
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const Matrix& coeffs, const Vec& rhs) {
    if (int(rhs.size()) != coeffs.rows())
        throw std::invalid_argument("solve_linear: rhs length does not match row count");
    Matrix a = coeffs;
    Matrix b(coeffs.rows(), 1);
    for (int i = 0; i < coeffs.rows(); ++i) b.at(i, 0) = rhs[i];
    const std::vector<int> pivots = rref(a, b);

    LinearSolution sol;
    for (int i = int(pivots.size()); i < a.rows(); ++i)
        if (!b.at(i, 0).is_zero()) return sol;  // 0 = nonzero row
    sol.consistent = true;

    const int m = a.cols();
    std::vector<int> pivot_of_col(m, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = int(r);

    sol.particular.assign(m, Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = b.at(int(r), 0);

    for (int col = 0; col < m; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vec v(m);
        v[col] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(int(r), col);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::optional<Matrix> invert(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("invert: matrix not square");
    Matrix a = m;
    Matrix b = Matrix::identity(m.rows());
    const std::vector<int> pivots = rref(a, b);
    if (int(pivots.size()) != m.rows()) return std::nullopt;
    return b;
}

Scalar determinant(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
    Matrix a = m;
    const int n = a.rows();
    Scalar det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        Scalar inv = Scalar(1) / a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            Scalar f = a.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

Matrix dual_map(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("dual_map: matrix not square");
    return m.transpose();
}

}  // namespace permlab
