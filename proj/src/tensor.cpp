#include "permlab/tensor.hpp"

#include <stdexcept>

namespace permlab {

bool MulTensor::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

bool ComulTensor::is_zero() const {
    for (const auto& x : d)
        if (!x.is_zero()) return false;
    return true;
}

MulTensor tensor_add(const MulTensor& a, const MulTensor& b) {
    if (a.dim != b.dim) throw std::invalid_argument("tensor_add: dimension mismatch");
    MulTensor r(a.dim);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

MulTensor tensor_sub(const MulTensor& a, const MulTensor& b) {
    if (a.dim != b.dim) throw std::invalid_argument("tensor_sub: dimension mismatch");
    MulTensor r(a.dim);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

MulTensor tensor_scaled(const MulTensor& a, const Scalar& c) {
    MulTensor r(a.dim);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] * c;
    return r;
}

MulTensor tensor_swap_args(const MulTensor& a) {
    MulTensor r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) r.at(j, i, k) = a.at(i, j, k);
    return r;
}

Vec prod(const MulTensor& t, int i, int j) {
    Vec r(t.dim);
    for (int k = 0; k < t.dim; ++k) r[k] = t.at(i, j, k);
    return r;
}

Vec apply_left(const MulTensor& t, int i, const Vec& y) {
    Vec r(t.dim);
    for (int j = 0; j < t.dim; ++j) {
        if (y[j].is_zero()) continue;
        for (int k = 0; k < t.dim; ++k) {
            const Scalar& c = t.at(i, j, k);
            if (!c.is_zero()) r[k] += c * y[j];
        }
    }
    return r;
}

Vec apply_right(const MulTensor& t, const Vec& x, int j) {
    Vec r(t.dim);
    for (int i = 0; i < t.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int k = 0; k < t.dim; ++k) {
            const Scalar& c = t.at(i, j, k);
            if (!c.is_zero()) r[k] += c * x[i];
        }
    }
    return r;
}

Vec apply(const MulTensor& t, const Vec& x, const Vec& y) {
    if (int(x.size()) != t.dim || int(y.size()) != t.dim)
        throw std::invalid_argument("tensor apply: dimension mismatch");
    Vec r(t.dim);
    for (int i = 0; i < t.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < t.dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (int k = 0; k < t.dim; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (!c.is_zero()) r[k] += c * f;
            }
        }
    }
    return r;
}

Matrix left_mult_matrix(const MulTensor& t, int i) {
    Matrix m(t.dim, t.dim);
    for (int j = 0; j < t.dim; ++j)
        for (int k = 0; k < t.dim; ++k) m.at(k, j) = t.at(i, j, k);
    return m;
}

Matrix right_mult_matrix(const MulTensor& t, int i) {
    Matrix m(t.dim, t.dim);
    for (int j = 0; j < t.dim; ++j)
        for (int k = 0; k < t.dim; ++k) m.at(k, j) = t.at(j, i, k);
    return m;
}

Matrix left_mult_matrix(const MulTensor& t, const Vec& x) {
    Matrix m(t.dim, t.dim);
    for (int i = 0; i < t.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (!c.is_zero()) m.at(k, j) += c * x[i];
            }
    }
    return m;
}

Grid comul_of_basis(const ComulTensor& t, int i) {
    Grid g(t.dim, t.dim);
    for (int j = 0; j < t.dim; ++j)
        for (int k = 0; k < t.dim; ++k) g.at(j, k) = t.at(i, j, k);
    return g;
}

Grid comul_apply(const ComulTensor& t, const Vec& x) {
    Grid g(t.dim, t.dim);
    for (int i = 0; i < t.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (!c.is_zero()) g.at(j, k) += c * x[i];
            }
    }
    return g;
}

}  // namespace permlab
