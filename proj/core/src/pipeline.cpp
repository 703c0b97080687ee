#include "gwcut/pipeline.hpp"

#include <cmath>
#include <string>

#include "gwcut/errors.hpp"
#include "gwcut/linalg.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

namespace {

constexpr std::uint64_t kPipelineDomain = 0xC3;

void validate_config(const PipelineConfig& cfg) {
    if (cfg.iterations < 1 || cfg.iterations > 5)
        throw input_error("pipeline: iterations must be in [1, 5], got " +
                          std::to_string(cfg.iterations));
    if (cfg.pca_dim != 2 && cfg.pca_dim != 3)
        throw input_error("pipeline: pca_dim must be 2 or 3, got " + std::to_string(cfg.pca_dim));
    if (cfg.trials == 0) throw input_error("pipeline: trials must be >= 1");
}

PointSet columns_as_points(const EmbeddingMatrix& v) {
    PointSet ps;
    ps.dim = v.ambient_dim;
    ps.points.reserve(v.count);
    for (std::size_t i = 0; i < v.count; ++i) {
        const auto col = v.column(i);
        ps.points.emplace_back(col.begin(), col.end());
    }
    return ps;
}

IterationResult run_iteration(const WeightMatrix& w_raw, PointSet points,
                              const PipelineConfig& cfg, std::size_t iter_index) {
    const std::size_t n = w_raw.size();
    const WeightMatrix w = cfg.pad_to > 0 ? pad_weights(w_raw, cfg.pad_to) : w_raw;

    const std::uint64_t iter_seed = substream_seed(domain_seed(cfg.seed, kPipelineDomain), iter_index);
    SolverConfig scfg = cfg.solver;
    scfg.seed = iter_seed;
    RelaxationResult relax = solve_relaxation(w, scfg);
    RoundingReport report = round_best(relax.embedding, w, cfg.trials, iter_seed, cfg.threads);

    IterationResult res;
    res.index = iter_index;
    res.points = std::move(points);
    res.solver_converged = relax.converged;
    res.solver_sweeps = relax.sweeps;
    res.degenerate_input = w_raw.total_weight() == 0.0;

    // Strip phantom padded indices; their weights are zero, so the cut value
    // and the report statistics are unchanged.
    res.embedding.ambient_dim = relax.embedding.ambient_dim;
    res.embedding.count = n;
    res.embedding.data.assign(relax.embedding.data.begin(),
                              relax.embedding.data.begin() +
                                  static_cast<std::ptrdiff_t>(relax.embedding.ambient_dim * n));
    report.best.signs.resize(n);
    res.partition = report.best;
    res.report = std::move(report);

    PcaResult pca = pca_project(columns_as_points(res.embedding), cfg.pca_dim);
    res.pca_coords = std::move(pca.coords);
    res.explained_variance = std::move(pca.explained_variance);
    res.quality = cluster_quality(res.pca_coords, res.partition.signs);
    return res;
}

RecursionResult run_recursive_impl(const WeightMatrix& w0, PointSet points0,
                                   const PipelineConfig& cfg) {
    validate_config(cfg);
    RecursionResult out;
    WeightMatrix w = w0;
    PointSet points = std::move(points0);
    for (std::size_t t = 0; t < cfg.iterations; ++t) {
        if (t > 0) w = build_weight_matrix(points, cfg.metric);
        IterationResult res = run_iteration(w, points, cfg, t);
        const PointSet& next = cfg.recurse_on == RecurseOn::pca
                                   ? res.pca_coords
                                   : columns_as_points(res.embedding);
        PointSet next_points = next;
        out.iterations.push_back(std::move(res));
        if (t + 1 < cfg.iterations) {
            if (points_identical(next_points, 1e-12)) {
                out.degenerate_stop = true;
                break;
            }
            points = std::move(next_points);
        }
    }
    return out;
}

} // namespace

PcaResult pca_project(const PointSet& points, std::size_t d) {
    const std::size_t n = points.count();
    if (n < 2) throw input_error("pca_project: need at least 2 points");
    if (d == 0 || d > points.dim)
        throw input_error("pca_project: requested dimension " + std::to_string(d) +
                          " exceeds input dimension " + std::to_string(points.dim));
    const std::size_t p = points.dim;

    PcaResult out;
    out.mean.assign(p, 0.0);
    for (const auto& pt : points.points)
        for (std::size_t j = 0; j < p; ++j) out.mean[j] += pt[j];
    for (auto& m : out.mean) m /= static_cast<double>(n);

    Matrix centered(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) centered(i, j) = points.points[i][j] - out.mean[j];

    Matrix cov(p, p);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += centered(i, a) * centered(i, b);
            s /= static_cast<double>(n - 1);
            cov(a, b) = s;
            cov(b, a) = s;
        }

    const SymmetricEigen eig = eigen_symmetric(cov);

    out.components = Matrix(p, d);
    out.explained_variance.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        out.explained_variance[k] = std::max(0.0, eig.values[k]);
        // Sign convention: largest-magnitude loading positive.
        std::size_t arg = 0;
        for (std::size_t j = 1; j < p; ++j)
            if (std::abs(eig.vectors(j, k)) > std::abs(eig.vectors(arg, k))) arg = j;
        const double flip = eig.vectors(arg, k) < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < p; ++j) out.components(j, k) = flip * eig.vectors(j, k);
    }

    out.coords.dim = d;
    out.coords.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> c(d, 0.0);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < p; ++j) c[k] += centered(i, j) * out.components(j, k);
        out.coords.points.push_back(std::move(c));
    }
    return out;
}

bool points_identical(const PointSet& points, double tol) {
    for (std::size_t i = 1; i < points.count(); ++i)
        for (std::size_t d = 0; d < points.dim; ++d)
            if (std::abs(points.points[i][d] - points.points[0][d]) > tol) return false;
    return true;
}

ClusterQuality cluster_quality(const PointSet& coords, std::span<const int> signs) {
    const std::size_t n = coords.count();
    if (signs.size() != n)
        throw input_error("cluster_quality: " + std::to_string(signs.size()) + " signs for " +
                          std::to_string(n) + " points");
    const std::size_t d = coords.dim;

    std::vector<double> centroid[2] = {std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
    std::size_t counts[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const int c = signs[i] > 0 ? 0 : 1;
        ++counts[c];
        for (std::size_t j = 0; j < d; ++j) centroid[c][j] += coords.points[i][j];
    }
    for (int c = 0; c < 2; ++c)
        if (counts[c] > 0)
            for (auto& x : centroid[c]) x /= static_cast<double>(counts[c]);

    ClusterQuality q;
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int c = signs[i] > 0 ? 0 : 1;
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = coords.points[i][j] - centroid[c][j];
            sq += diff * diff;
        }
    }
    q.within_cluster_variance = n > 0 ? sq / static_cast<double>(n) : 0.0;
    if (counts[0] > 0 && counts[1] > 0)
        q.between_centroid_distance = euclidean_distance(centroid[0], centroid[1]);
    q.separation_ratio =
        q.between_centroid_distance / (std::sqrt(q.within_cluster_variance) + 1e-12);
    return q;
}

IterationResult run_gwa_once(const PointSet& points, const PipelineConfig& cfg) {
    validate_config(cfg);
    const WeightMatrix w = build_weight_matrix(points, cfg.metric);
    return run_iteration(w, points, cfg, 0);
}

IterationResult run_gwa_once(const WeightMatrix& w, const PipelineConfig& cfg) {
    validate_config(cfg);
    return run_iteration(w, PointSet{}, cfg, 0);
}

RecursionResult run_recursive(const PointSet& points, const PipelineConfig& cfg) {
    return run_recursive_impl(build_weight_matrix(points, cfg.metric), points, cfg);
}

RecursionResult run_recursive(const WeightMatrix& w, const PipelineConfig& cfg) {
    return run_recursive_impl(w, PointSet{}, cfg);
}

} // namespace gwcut
