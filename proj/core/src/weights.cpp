#include "gwcut/weights.hpp"

#include <cmath>
#include <string>

#include "gwcut/errors.hpp"

namespace gwcut {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

double WeightMatrix::total_weight() const {
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) total += (*this)(i, j);
    return total;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

WeightMatrix build_weight_matrix(const PointSet& points, Metric metric) {
    const std::size_t n = points.count();
    if (n < 2) throw input_error("build_weight_matrix: need at least 2 points, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (points.points[i].size() != points.dim)
            throw input_error("build_weight_matrix: point " + std::to_string(i) + " has dimension " +
                              std::to_string(points.points[i].size()) + ", expected " +
                              std::to_string(points.dim));
    }

    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = euclidean_distance(points.points[i], points.points[j]);
            if (metric == Metric::squared_euclidean) d *= d;
            entries[i * n + j] = d;
            entries[j * n + i] = d;
        }
    }
    return WeightMatrix(n, std::move(entries));
}

WeightMatrix validate_weights(const Matrix& raw) {
    const std::size_t n = raw.rows();
    if (n == 0 || raw.cols() != n)
        throw input_error("validate_weights: matrix must be square and nonempty, got " +
                          std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = raw(i, j);
            if (!std::isfinite(v))
                throw input_error("validate_weights: non-finite entry at " + pair_str(i, j));
            scale = std::max(scale, std::abs(v));
        }
    const double tol = 1e-9 * scale;

    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(raw(i, i)) > tol)
            throw input_error("validate_weights: nonzero diagonal entry at " + pair_str(i, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(raw(i, j) - raw(j, i)) > tol)
                throw input_error("validate_weights: asymmetric entries at " + pair_str(i, j) +
                                  " / " + pair_str(j, i));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (raw(i, j) < -tol)
                throw input_error("validate_weights: negative entry at " + pair_str(i, j));
        }

    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = std::max(0.0, 0.5 * (raw(i, j) + raw(j, i)));
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    return WeightMatrix(n, std::move(entries));
}

WeightMatrix pad_weights(const WeightMatrix& w, std::size_t m) {
    const std::size_t n = w.size();
    if (m < n)
        throw input_error("pad_weights: target dimension " + std::to_string(m) +
                          " is smaller than matrix size " + std::to_string(n));
    if (m == n) return w;

    std::vector<double> entries(m * m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * m + j] = w(i, j);
    return WeightMatrix(m, std::move(entries));
}

} // namespace gwcut
