#include "gwcut/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gwcut/errors.hpp"

namespace gwcut {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

SymmetricEigen eigen_symmetric(const Matrix& input) {
    const std::size_t n = input.rows();
    if (input.cols() != n) throw input_error("eigen_symmetric: matrix must be square");

    Matrix a = input;
    // Symmetrize so roundoff in the caller cannot stall the sweeps.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = m;
            a(j, i) = m;
        }

    Matrix v = Matrix::identity(n);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    const double stop = scale * 1e-14;

    const std::size_t max_sweeps = 64;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
        if (off <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

double min_eigenvalue_symmetric(const Matrix& a) {
    const auto eig = eigen_symmetric(a);
    return eig.values.empty() ? 0.0 : eig.values.back();
}

int cholesky_psd(const Matrix& a, Matrix& lower, double clamp_tol) {
    const std::size_t n = a.rows();
    lower = Matrix(n, n);
    int clamped = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
        if (d < -clamp_tol) return -1;
        if (d <= clamp_tol) {
            // Semidefinite pivot: the remaining column must vanish.
            lower(j, j) = 0.0;
            ++clamped;
            continue;
        }
        const double ljj = std::sqrt(d);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            lower(i, j) = s / ljj;
        }
    }
    return clamped;
}

} // namespace gwcut
