#include "gwcut/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwcut/errors.hpp"
#include "gwcut/linalg.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

namespace {

constexpr std::uint64_t kSolverDomain = 0xA1;

void check_sizes(const WeightMatrix& w, const EmbeddingMatrix& v, const char* who) {
    if (v.count != w.size())
        throw input_error(std::string(who) + ": embedding has " + std::to_string(v.count) +
                          " columns, weight matrix has size " + std::to_string(w.size()));
}

// Σ_j w_ij v_j for column i.
void weighted_sum(const WeightMatrix& w, const EmbeddingMatrix& v, std::size_t i,
                  std::vector<double>& out) {
    const std::size_t k = v.ambient_dim;
    std::fill(out.begin(), out.end(), 0.0);
    const auto row = w.row(i);
    for (std::size_t j = 0; j < v.count; ++j) {
        const double wij = row[j];
        if (wij == 0.0) continue;
        const auto col = v.column(j);
        for (std::size_t d = 0; d < k; ++d) out[d] += wij * col[d];
    }
}

} // namespace

double relaxed_objective(const WeightMatrix& w, const EmbeddingMatrix& v) {
    check_sizes(w, v, "relaxed_objective");
    const std::size_t n = w.size();
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = w.row(i);
        const auto vi = v.column(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double wij = row[j];
            if (wij == 0.0) continue;
            cross += wij * dot(vi, v.column(j));
        }
    }
    return 0.5 * (w.total_weight() - cross);
}

double stationarity_residual(const WeightMatrix& w, const EmbeddingMatrix& v) {
    check_sizes(w, v, "stationarity_residual");
    const std::size_t k = v.ambient_dim;
    std::vector<double> g(k);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.count; ++i) {
        weighted_sum(w, v, i, g);
        const double gn = norm2(g);
        if (gn == 0.0) continue;
        const auto vi = v.column(i);
        double r2 = 0.0;
        for (std::size_t d = 0; d < k; ++d) {
            const double r = vi[d] + g[d] / gn;
            r2 += r * r;
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    return worst;
}

RelaxationResult solve_relaxation(const WeightMatrix& w, const SolverConfig& cfg) {
    const std::size_t n = w.size();
    const std::size_t rank = cfg.rank == 0 ? n : cfg.rank;
    if (cfg.max_sweeps == 0) throw input_error("solve_relaxation: max_sweeps must be >= 1");
    if (!(cfg.objective_tol > 0.0)) throw input_error("solve_relaxation: objective_tol must be > 0");

    RelaxationResult res;
    auto& v = res.embedding;
    v.ambient_dim = rank;
    v.count = n;
    v.data.resize(rank * n);

    const std::uint64_t base = domain_seed(cfg.seed, kSolverDomain);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(substream_seed(base, i));
        auto col = v.column(i);
        double nrm = 0.0;
        while (nrm == 0.0) {
            for (std::size_t d = 0; d < rank; ++d) col[d] = rng.next_gaussian();
            nrm = norm2(col);
        }
        for (std::size_t d = 0; d < rank; ++d) col[d] /= nrm;
    }

    double obj = relaxed_objective(w, v);
    res.objective_trace.push_back(obj);

    std::vector<double> g(rank);
    while (res.sweeps < cfg.max_sweeps) {
        ++res.sweeps;
        for (std::size_t i = 0; i < n; ++i) {
            weighted_sum(w, v, i, g);
            const double gn = norm2(g);
            if (gn == 0.0) continue;
            auto col = v.column(i);
            for (std::size_t d = 0; d < rank; ++d) col[d] = -g[d] / gn;
        }
        const double next = relaxed_objective(w, v);
        res.objective_trace.push_back(next);
        const double change = std::abs(next - obj) / std::max({std::abs(next), std::abs(obj), 1.0e-300});
        obj = next;
        if (change < cfg.objective_tol &&
            stationarity_residual(w, v) <= cfg.stationarity_tol) {
            res.converged = true;
            break;
        }
    }

    res.objective = obj;
    return res;
}

Matrix gram_matrix(const EmbeddingMatrix& v) {
    const std::size_t n = v.count;
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto vi = v.column(i);
        x(i, i) = dot(vi, vi);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dot(vi, v.column(j));
            x(i, j) = d;
            x(j, i) = d;
        }
    }
    return x;
}

EmbeddingMatrix cholesky_embed(const Matrix& x) {
    const std::size_t n = x.rows();
    if (n == 0 || x.cols() != n)
        throw input_error("cholesky_embed: matrix must be square and nonempty");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(x(i, j) - x(j, i)) > 1e-9)
                throw input_error("cholesky_embed: matrix is not symmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(x(i, i) - 1.0) > 1e-8)
            throw input_error("cholesky_embed: diagonal entry " + std::to_string(i) +
                              " is not 1 within 1e-8");

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (x(i, j) + x(j, i));

    Matrix lower;
    int clamped = cholesky_psd(a, lower, 1e-12);
    bool renormalize = false;
    if (clamped != 0) {
        // Singular or slightly indefinite: decide which before jittering.
        const double lmin = min_eigenvalue_symmetric(a);
        if (lmin < -1e-7)
            throw numeric_error("cholesky_embed: matrix is indefinite (min eigenvalue " +
                                std::to_string(lmin) + ")");
        for (std::size_t i = 0; i < n; ++i) a(i, i) += 1e-10;
        // Pivots inside the PSD tolerance are truncated to zero; by PSD the
        // Schur complement there is of the same small magnitude, so the
        // round-trip error stays below 1e-6.
        clamped = cholesky_psd(a, lower, 1e-7);
        if (clamped < 0)
            throw numeric_error("cholesky_embed: factorization failed after jitter");
        renormalize = true;
    }

    EmbeddingMatrix v;
    v.ambient_dim = n;
    v.count = n;
    v.data.resize(n * n);
    // V = Lᵀ: column i of V is row i of L.
    for (std::size_t i = 0; i < n; ++i) {
        auto col = v.column(i);
        for (std::size_t d = 0; d < n; ++d) col[d] = lower(i, d);
    }
    if (renormalize) {
        for (std::size_t i = 0; i < n; ++i) {
            auto col = v.column(i);
            const double nrm = norm2(col);
            if (nrm > 0.0)
                for (auto& c : col) c /= nrm;
        }
    }
    return v;
}

} // namespace gwcut
