#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gwcut/matrix.hpp"
#include "gwcut/weights.hpp"

namespace gwcut {

// Unit-column embedding V = {v_1 | ... | v_m}. Column-major storage.
struct EmbeddingMatrix {
    std::size_t ambient_dim = 0; // rows
    std::size_t count = 0;       // columns
    std::vector<double> data;    // ambient_dim * count, column-major

    std::span<double> column(std::size_t i) {
        return {data.data() + i * ambient_dim, ambient_dim};
    }
    std::span<const double> column(std::size_t i) const {
        return {data.data() + i * ambient_dim, ambient_dim};
    }

    bool operator==(const EmbeddingMatrix&) const = default;
};

struct SolverConfig {
    std::size_t rank = 0;            // rows of V; 0 means full rank (= count)
    std::size_t max_sweeps = 500;
    double objective_tol = 1e-7;     // relative objective change per sweep
    double stationarity_tol = 1e-6;  // column residual at convergence
    std::uint64_t seed = 0;
};

struct RelaxationResult {
    EmbeddingMatrix embedding;
    double objective = 0.0;
    std::size_t sweeps = 0;
    bool converged = false;
    std::vector<double> objective_trace; // initial value, then one entry per sweep
};

// ½ Σ_{i<j} w_ij (1 - <v_i, v_j>). Always within [0, Σ_{i<j} w_ij] for unit
// columns.
double relaxed_objective(const WeightMatrix& w, const EmbeddingMatrix& v);

// Maximizes the relaxed objective by coordinate descent over columns:
// v_i <- -normalize(Σ_j w_ij v_j), sweeping until the relative objective
// change drops below objective_tol and every column is stationary within
// stationarity_tol. Columns with zero weighted sum (phantom padded indices)
// stay at their seeded random initialization. Non-convergence within
// max_sweeps returns the best iterate with converged = false.
RelaxationResult solve_relaxation(const WeightMatrix& w, const SolverConfig& cfg = {});

// max_i || v_i + g_i / ||g_i|| || over columns with g_i = Σ_j w_ij v_j != 0;
// zero at a first-order stationary point.
double stationarity_residual(const WeightMatrix& w, const EmbeddingMatrix& v);

// X = VᵀV.
Matrix gram_matrix(const EmbeddingMatrix& v);

// Recovers V with VᵀV = X from a PSD Gram matrix with unit diagonal. A
// singular X gets a 1e-10 diagonal jitter before factorization and the
// result is renormalized column-wise; an indefinite X (eigenvalue < -1e-7)
// raises numeric_error.
EmbeddingMatrix cholesky_embed(const Matrix& x);

} // namespace gwcut
