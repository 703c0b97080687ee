#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwcut/matrix.hpp"

namespace gwcut {

enum class Metric { euclidean, squared_euclidean };

struct PointSet {
    std::size_t dim = 0;
    std::vector<std::vector<double>> points;

    std::size_t count() const { return points.size(); }
};

// Symmetric nonnegative dissimilarity matrix with a zero diagonal.
// Constructed only through build_weight_matrix / validate_weights /
// pad_weights, which establish the invariants.
class WeightMatrix {
public:
    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

    // Σ_{i<j} w_ij
    double total_weight() const;

    bool operator==(const WeightMatrix&) const = default;

private:
    WeightMatrix(std::size_t n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {}

    std::size_t n_ = 0;
    std::vector<double> entries_;

    friend WeightMatrix build_weight_matrix(const PointSet&, Metric);
    friend WeightMatrix validate_weights(const Matrix&);
    friend WeightMatrix pad_weights(const WeightMatrix&, std::size_t);
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Pairwise dissimilarities of a point set. Requires n >= 2 points of equal
// dimension.
WeightMatrix build_weight_matrix(const PointSet& points, Metric metric = Metric::euclidean);

// Wraps a raw square array after checking symmetry (1e-9 relative to the
// largest-magnitude entry), nonnegativity and a zero diagonal. Entries are
// mirrored as (w_ij + w_ji) / 2; offending indices are named in the error.
WeightMatrix validate_weights(const Matrix& raw);

// Extends W with zero rows and columns to an m x m matrix (m >= n). The
// relaxation over the padded matrix carries the same objective value; the
// extra indices are phantoms with no weight.
WeightMatrix pad_weights(const WeightMatrix& w, std::size_t m);

} // namespace gwcut
