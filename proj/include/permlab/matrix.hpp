#ifndef PERMLAB_MATRIX_HPP
#define PERMLAB_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "permlab/scalar.hpp"

namespace permlab {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;  ///< matrix times coordinate column

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Sum and scaling of coordinate vectors.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);
Vec basis_vec(int dim, int i);

/// Renders a vector against basis names, e.g. "2*e3 - e4"; "0" when zero.
std::string render(const Vec& v, const std::vector<std::string>& names);

}  // namespace permlab

#endif
