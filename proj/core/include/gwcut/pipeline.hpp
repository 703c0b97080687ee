#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gwcut/relaxation.hpp"
#include "gwcut/rounding.hpp"
#include "gwcut/weights.hpp"

namespace gwcut {

// Quantifies cluster tightness of a partitioned point set: pooled
// within-cluster variance, distance of the two centroids, and their ratio
// separation = distance / (sqrt(variance) + 1e-12).
struct ClusterQuality {
    double within_cluster_variance = 0.0;
    double between_centroid_distance = 0.0;
    double separation_ratio = 0.0;
};

struct PcaResult {
    PointSet coords;                        // projected points, dimension d
    std::vector<double> explained_variance; // top-d eigenvalues, non-increasing
    Matrix components;                      // input_dim x d, columns = directions
    std::vector<double> mean;
};

struct IterationResult {
    std::size_t index = 0;
    PointSet points;          // dataset this iteration ran on (empty for matrix input)
    EmbeddingMatrix embedding; // phantom padded columns already stripped
    CutPartition partition;
    PointSet pca_coords;
    std::vector<double> explained_variance;
    ClusterQuality quality;
    RoundingReport report;
    bool solver_converged = true;
    std::size_t solver_sweeps = 0;
    bool degenerate_input = false; // all weights zero
};

enum class RecurseOn { pca, raw_embedding };

struct PipelineConfig {
    std::size_t iterations = 4; // in [1, 5]
    std::size_t pca_dim = 2;    // 2 or 3
    std::size_t pad_to = 0;     // 0 = no padding; otherwise m >= n
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    SolverConfig solver;        // solver.seed is ignored; per-iteration seeds
                                // derive from `seed`
    Metric metric = Metric::euclidean;
    RecurseOn recurse_on = RecurseOn::pca;
    unsigned threads = 1;
};

// Centers the data and projects onto the top-d principal directions
// (descending variance). Each direction's sign is fixed so its
// largest-magnitude loading is positive.
PcaResult pca_project(const PointSet& points, std::size_t d);

ClusterQuality cluster_quality(const PointSet& coords, std::span<const int> signs);

// Degeneracy predicate of the recursion: true when every coordinate of every
// point sits within tol of the first point's.
bool points_identical(const PointSet& points, double tol);

// One pipeline pass: weights (padded to cfg.pad_to if set), relaxation,
// rounding, phantom-index stripping, PCA of the embedding columns and
// cluster quality of the PCA coordinates under the partition.
IterationResult run_gwa_once(const PointSet& points, const PipelineConfig& cfg);
IterationResult run_gwa_once(const WeightMatrix& w, const PipelineConfig& cfg);

struct RecursionResult {
    std::vector<IterationResult> iterations;
    bool degenerate_stop = false; // PCA coordinates collapsed; recursion truncated
};

// Iteration 0 runs on the input; iteration t >= 1 runs on the PCA
// coordinates (or raw embedding columns) of iteration t-1's embedding.
RecursionResult run_recursive(const PointSet& points, const PipelineConfig& cfg);
RecursionResult run_recursive(const WeightMatrix& w, const PipelineConfig& cfg);

} // namespace gwcut
