#include "specsketch/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>

#include "specsketch/errors.hpp"

namespace specsketch {

SymmetricMatrix SymmetricMatrix::from_dense(Matrix m, double sym_tol) {
    if (m.rows != m.cols) throw InvalidInputError("SymmetricMatrix: matrix not square");
    if (m.rows == 0) throw InvalidInputError("SymmetricMatrix: zero dimension");
    if (!all_finite(m)) throw InvalidInputError("SymmetricMatrix: non-finite entries");
    const std::size_t d = m.rows;
    double asym = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
    if (asym > sym_tol * specsketch::frobenius_norm(m))
        throw InvalidInputError("SymmetricMatrix: asymmetry exceeds tolerance");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = v;
            m(j, i) = v;
        }
    SymmetricMatrix a;
    a.dim_ = d;
    a.sparse_ = false;
    a.dense_ = std::move(m);
    return a;
}

SymmetricMatrix SymmetricMatrix::from_sparse(std::size_t dim, std::vector<SparseEntry> entries) {
    if (dim == 0) throw InvalidInputError("SymmetricMatrix: zero dimension");
    std::map<std::pair<std::size_t, std::size_t>, double> upper;
    for (const auto& e : entries) {
        if (e.row >= dim || e.col >= dim)
            throw InvalidInputError("SymmetricMatrix: sparse index out of range");
        if (!std::isfinite(e.value))
            throw InvalidInputError("SymmetricMatrix: non-finite entries");
        const auto key = std::minmax(e.row, e.col);
        auto [it, inserted] = upper.try_emplace({key.first, key.second}, e.value);
        if (!inserted && it->second != e.value)
            throw InvalidInputError("SymmetricMatrix: conflicting duplicate sparse entries");
    }
    SymmetricMatrix a;
    a.dim_ = dim;
    a.sparse_ = true;
    a.entries_.reserve(upper.size());
    for (const auto& [key, v] : upper)
        if (v != 0.0) a.entries_.push_back({key.first, key.second, v});
    return a;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
    return from_dense(identity_matrix(dim));
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return from_dense(std::move(m));
}

double SymmetricMatrix::at(std::size_t i, std::size_t j) const {
    if (!sparse_) return dense_(i, j);
    const auto key = std::minmax(i, j);
    for (const auto& e : entries_)
        if (e.row == key.first && e.col == key.second) return e.value;
    return 0.0;
}

const Matrix& SymmetricMatrix::dense() const {
    if (sparse_) throw InvalidInputError("SymmetricMatrix: dense access on sparse storage");
    return dense_;
}

const std::vector<SparseEntry>& SymmetricMatrix::entries() const {
    if (!sparse_) throw InvalidInputError("SymmetricMatrix: sparse access on dense storage");
    return entries_;
}

Matrix SymmetricMatrix::to_dense() const {
    if (!sparse_) return dense_;
    Matrix m(dim_, dim_);
    for (const auto& e : entries_) {
        m(e.row, e.col) = e.value;
        m(e.col, e.row) = e.value;
    }
    return m;
}

std::size_t SymmetricMatrix::nnz() const {
    if (!sparse_) return dim_ * dim_;
    std::size_t n = 0;
    for (const auto& e : entries_) n += (e.row == e.col) ? 1 : 2;
    return n;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    if (sparse_) {
        for (const auto& e : entries_)
            if (e.row == e.col) t += e.value;
    } else {
        for (std::size_t i = 0; i < dim_; ++i) t += dense_(i, i);
    }
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    if (!sparse_) return specsketch::frobenius_norm(dense_);
    double s = 0.0;
    for (const auto& e : entries_) {
        const double v2 = e.value * e.value;
        s += (e.row == e.col) ? v2 : 2.0 * v2;
    }
    return std::sqrt(s);
}

void SymmetricMatrix::apply(const double* x, double* y) const {
    std::memset(y, 0, dim_ * sizeof(double));
    if (sparse_) {
        for (const auto& e : entries_) {
            y[e.row] += e.value * x[e.col];
            if (e.row != e.col) y[e.col] += e.value * x[e.row];
        }
    } else {
        for (std::size_t i = 0; i < dim_; ++i) {
            const double* ai = dense_.row(i);
            double s = 0.0;
            for (std::size_t j = 0; j < dim_; ++j) s += ai[j] * x[j];
            y[i] = s;
        }
    }
}

SymmetricMatrix SymmetricMatrix::scaled(double factor) const {
    if (!std::isfinite(factor)) throw InvalidInputError("SymmetricMatrix: non-finite scale");
    SymmetricMatrix a;
    a.dim_ = dim_;
    a.sparse_ = sparse_;
    if (sparse_) {
        a.entries_ = entries_;
        for (auto& e : a.entries_) e.value *= factor;
    } else {
        a.dense_ = dense_;
        for (auto& v : a.dense_.data) v *= factor;
    }
    return a;
}

}  // namespace specsketch
