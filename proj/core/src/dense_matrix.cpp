#include "specsketch/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "specsketch/errors.hpp"

namespace specsketch {

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw InvalidInputError("matmul: dimension mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        double* ci = c.row(i);
        const double* ai = a.row(i);
        for (std::size_t l = 0; l < a.cols; ++l) {
            const double ail = ai[l];
            if (ail == 0.0) continue;
            const double* bl = b.row(l);
            for (std::size_t j = 0; j < b.cols; ++j) ci[j] += ail * bl[j];
        }
    }
    return c;
}

Matrix matmul_abt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw InvalidInputError("matmul_abt: dimension mismatch");
    Matrix c(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* bj = b.row(j);
            double s = 0.0;
            for (std::size_t l = 0; l < a.cols; ++l) s += ai[l] * bj[l];
            ci[j] = s;
        }
    }
    return c;
}

Matrix gram(const Matrix& a) {
    Matrix g(a.cols, a.cols);
    for (std::size_t l = 0; l < a.rows; ++l) {
        const double* al = a.row(l);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double ali = al[i];
            if (ali == 0.0) continue;
            double* gi = g.row(i);
            for (std::size_t j = i; j < a.cols; ++j) gi[j] += ali * al[j];
        }
    }
    for (std::size_t i = 0; i < a.cols; ++i)
        for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
    return g;
}

bool all_finite(const Matrix& a) {
    return std::all_of(a.data.begin(), a.data.end(),
                       [](double x) { return std::isfinite(x); });
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw InvalidInputError("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data) s += x * x;
    return std::sqrt(s);
}

namespace {

// In-place Householder QR.  On exit the strict upper triangle of `a` holds R,
// the reflectors live on and below the diagonal, rdiag holds the R diagonal
// and tau the reflector scalings.
void householder_reduce(Matrix& a, std::vector<double>& rdiag, std::vector<double>& tau) {
    const std::size_t m = a.rows, n = a.cols;
    rdiag.assign(n, 0.0);
    tau.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double norm2 = 0.0;
        for (std::size_t i = j; i < m; ++i) norm2 += a(i, j) * a(i, j);
        const double norm = std::sqrt(norm2);
        const double alpha = a(j, j) >= 0.0 ? -norm : norm;
        rdiag[j] = alpha;
        if (norm == 0.0) continue;
        const double v0 = a(j, j) - alpha;
        double vnorm2 = v0 * v0;
        for (std::size_t i = j + 1; i < m; ++i) vnorm2 += a(i, j) * a(i, j);
        if (vnorm2 == 0.0) continue;
        a(j, j) = v0;
        tau[j] = 2.0 / vnorm2;
        for (std::size_t c = j + 1; c < n; ++c) {
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += a(i, j) * a(i, c);
            const double f = tau[j] * dot;
            for (std::size_t i = j; i < m; ++i) a(i, c) -= f * a(i, j);
        }
    }
}

}  // namespace

Matrix qr_r_factor(Matrix a) {
    const std::size_t n = a.cols;
    if (a.rows < n) throw InvalidInputError("qr_r_factor: need rows >= cols");
    std::vector<double> rdiag, tau;
    householder_reduce(a, rdiag, tau);
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = rdiag[i];
        for (std::size_t j = i + 1; j < n; ++j) r(i, j) = a(i, j);
    }
    return r;
}

Matrix qr_orthonormal_columns(Matrix a) {
    const std::size_t m = a.rows, n = a.cols;
    if (m < n) throw InvalidInputError("qr_orthonormal_columns: need rows >= cols");
    std::vector<double> rdiag, tau;
    householder_reduce(a, rdiag, tau);
    // Accumulate Q = H_0 ... H_{n-1} applied to the first n columns of I.
    Matrix q(m, n);
    for (std::size_t j = 0; j < n; ++j) q(j, j) = 1.0;
    for (std::size_t j = n; j-- > 0;) {
        if (tau[j] == 0.0) continue;
        for (std::size_t c = 0; c < n; ++c) {
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += a(i, j) * q(i, c);
            const double f = tau[j] * dot;
            for (std::size_t i = j; i < m; ++i) q(i, c) -= f * a(i, j);
        }
    }
    // Sign fix: forcing the R diagonal positive makes QR of a Gaussian input a
    // Haar sample on the Stiefel manifold.
    for (std::size_t j = 0; j < n; ++j) {
        if (rdiag[j] < 0.0)
            for (std::size_t i = 0; i < m; ++i) q(i, j) = -q(i, j);
    }
    return q;
}

std::optional<Matrix> cholesky_lower(const Matrix& a) {
    if (a.rows != a.cols) throw InvalidInputError("cholesky_lower: matrix not square");
    const std::size_t n = a.rows;
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

}  // namespace specsketch
