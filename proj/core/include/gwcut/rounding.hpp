#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gwcut/relaxation.hpp"
#include "gwcut/rng.hpp"
#include "gwcut/weights.hpp"

namespace gwcut {

// Sign assignment y in {-1,+1}^n with its cut value (sum of cross-cluster
// weights).
struct CutPartition {
    std::vector<int> signs;
    double cut_value = 0.0;

    bool operator==(const CutPartition&) const = default;
};

struct RoundingReport {
    CutPartition best;
    std::size_t trials = 0;
    double sampled_mean_cut = 0.0;
    double closed_form_expected_cut = 0.0;
    double relaxed_objective = 0.0;
    double ratio_to_relaxation = 0.0; // best.cut_value / relaxed_objective
    std::uint64_t seed = 0;

    bool operator==(const RoundingReport&) const = default;
};

// Componentwise standard normal, normalized: uniform on the unit sphere.
std::vector<double> sample_hyperplane_normal(std::size_t dim, Rng& rng);

// The RNG substream of one rounding trial. Part of the contract: parallel
// trials seeded this way reproduce sequential execution.
Rng make_trial_rng(std::uint64_t seed, std::uint64_t trial);

// Σ over pairs i<j with differing signs of w_ij.
double cut_value(const WeightMatrix& w, std::span<const int> signs);

// signs[i] = sign(<v_i, r>), with <v_i, r> = 0 resolved to +1.
CutPartition round_once(const EmbeddingMatrix& v, const WeightMatrix& w,
                        std::span<const double> r);

// Exact expectation of round_once's cut value under a uniform hyperplane:
// Σ_{i<j} w_ij * arccos(<v_i, v_j>) / π, dot products clamped to [-1, 1].
double expected_cut(const EmbeddingMatrix& v, const WeightMatrix& w);

struct AlphaMinimum {
    double theta = 0.0; // minimizer of 2θ / (π (1 - cos θ)) on (0, π]
    double alpha = 0.0; // minimum value, the approximation guarantee
};

AlphaMinimum alpha_minimum();
double alpha_constant();

// Best partition over `trials` independent hyperplanes. Deterministic per
// seed; trials may execute on several threads with identical results.
RoundingReport round_best(const EmbeddingMatrix& v, const WeightMatrix& w,
                          std::size_t trials, std::uint64_t seed, unsigned threads = 1);

} // namespace gwcut
