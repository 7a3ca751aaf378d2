#include "specsketch/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specsketch/errors.hpp"

namespace specsketch {

namespace {

constexpr int kMaxQlIterations = 60;
constexpr int kMaxJacobiSweeps = 60;

// Householder reduction to tridiagonal form.  On exit d holds the diagonal
// and e[1..n-1] the subdiagonal.  With accumulate set, z is overwritten by
// the orthogonal factor Q with A = Q T Q^T; otherwise z is scratch.
void tridiagonalize(Matrix& z, std::vector<double>& d, std::vector<double>& e,
                    bool accumulate) {
    const std::size_t n = z.rows;
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    if (n == 1) {
        d[0] = z(0, 0);
        z(0, 0) = 1.0;
        return;
    }

    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    if (accumulate) z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = z(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k)
                        z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }

    if (accumulate) {
        d[0] = 0.0;
        e[0] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i] != 0.0) {
                for (std::size_t j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                    for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
                }
            }
            d[i] = z(i, i);
            z(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) {
                z(j, i) = 0.0;
                z(i, j) = 0.0;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) d[i] = z(i, i);
        e[0] = 0.0;
    }
}

// Implicit-shift QL on a tridiagonal (d, e).  Rotations are applied to the
// columns of z when it is non-null.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z) {
    const std::size_t n = d.size();
    if (n <= 1) return;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int iterations = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iterations++ == kMaxQlIterations)
                    throw ConvergenceError("sym_eig: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z != nullptr) {
                        for (std::size_t k = 0; k < z->rows; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

std::vector<std::size_t> descending_order(const std::vector<double>& d) {
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
    return order;
}

}  // namespace

EigenDecomposition sym_eig(const SymmetricMatrix& a) {
    Matrix z = a.to_dense();
    if (!all_finite(z)) throw InvalidInputError("sym_eig: non-finite input");
    std::vector<double> d, e;
    tridiagonalize(z, d, e, /*accumulate=*/true);
    ql_implicit(d, e, &z);

    const auto order = descending_order(d);
    const std::size_t n = d.size();
    EigenDecomposition out;
    out.eigenvalues.values.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues.values[j] = d[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = z(i, order[j]);
    }
    return out;
}

Spectrum sym_eigenvalues(const SymmetricMatrix& a) {
    Matrix z = a.to_dense();
    if (!all_finite(z)) throw InvalidInputError("sym_eigenvalues: non-finite input");
    std::vector<double> d, e;
    tridiagonalize(z, d, e, /*accumulate=*/false);
    ql_implicit(d, e, nullptr);
    return Spectrum::sorted(std::move(d));
}

namespace {

// One-sided Jacobi on the rows of ct (each row is a column of the original
// matrix), so all inner loops run over contiguous memory.
std::vector<double> jacobi_column_norms(Matrix ct) {
    const std::size_t n = ct.rows;  // columns being orthogonalized
    const std::size_t m = ct.cols;
    const double tol = 1e-14;

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* rp = ct.row(p);
                double* rq = ct.row(q);
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    app += rp[k] * rp[k];
                    aqq += rq[k] * rq[k];
                    apq += rp[k] * rq[k];
                }
                if (std::abs(apq) <= tol * std::sqrt(app * aqq)) continue;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t =
                    std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const double vp = rp[k];
                    const double vq = rq[k];
                    rp[k] = c * vp - s * vq;
                    rq[k] = s * vp + c * vq;
                }
                rotated = true;
            }
        }
        if (!rotated) {
            std::vector<double> sv(n);
            for (std::size_t p = 0; p < n; ++p) {
                const double* rp = ct.row(p);
                double s = 0.0;
                for (std::size_t k = 0; k < m; ++k) s += rp[k] * rp[k];
                sv[p] = std::sqrt(s);
            }
            std::stable_sort(sv.begin(), sv.end(), [](double a, double b) { return a > b; });
            return sv;
        }
    }
    throw ConvergenceError("singular_values: Jacobi sweeps did not converge");
}

}  // namespace

std::vector<double> singular_values(const Matrix& b) {
    if (!all_finite(b)) throw InvalidInputError("singular_values: non-finite input");
    if (b.rows == 0 || b.cols == 0) return {};
    Matrix work = b.rows >= b.cols ? b : transpose(b);
    // A tall factor costs one extra QR but shrinks every Jacobi rotation.
    if (work.rows > work.cols + work.cols / 2) work = qr_r_factor(std::move(work));
    return jacobi_column_norms(transpose(work));
}

}  // namespace specsketch
