#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwcut/datasets.hpp"
#include "gwcut/errors.hpp"
#include "gwcut/linalg.hpp"
#include "gwcut/relaxation.hpp"
#include "oracles.hpp"

using namespace gwcut;

namespace {

WeightMatrix k2_unit() {
    Matrix m(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return validate_weights(m);
}

WeightMatrix k3_unit() {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) m(i, j) = 1.0;
    return validate_weights(m);
}

// Three coplanar unit vectors at mutual 120 degrees.
EmbeddingMatrix k3_embedding() {
    EmbeddingMatrix v;
    v.ambient_dim = 2;
    v.count = 3;
    const double s = std::sqrt(3.0) / 2.0;
    v.data = {1.0, 0.0, -0.5, s, -0.5, -s};
    return v;
}

EmbeddingMatrix pair_embedding(double x2) {
    EmbeddingMatrix v;
    v.ambient_dim = 2;
    v.count = 2;
    v.data = {1.0, 0.0, x2, std::sqrt(std::max(0.0, 1.0 - x2 * x2))};
    return v;
}

} // namespace

TEST_CASE("relaxed objective of an antipodal pair is 1") {
    EmbeddingMatrix v;
    v.ambient_dim = 2;
    v.count = 2;
    v.data = {1.0, 0.0, -1.0, 0.0};
    CHECK(relaxed_objective(k2_unit(), v) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("relaxed objective of identical vectors is 0") {
    EmbeddingMatrix v;
    v.ambient_dim = 2;
    v.count = 2;
    v.data = {1.0, 0.0, 1.0, 0.0};
    CHECK(relaxed_objective(k2_unit(), v) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("relaxed objective of the 120-degree triangle is 9/4") {
    CHECK(relaxed_objective(k3_unit(), k3_embedding()) == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("relaxed objective rejects size mismatch") {
    CHECK_THROWS_AS(relaxed_objective(k3_unit(), pair_embedding(0.0)), input_error);
}

TEST_CASE("objective stays within [0, total weight] for random embeddings") {
    const auto w = oracles::random_weights(9, 5);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto v = oracles::random_unit_columns(4, 9, seed);
        const double obj = relaxed_objective(w, v);
        CHECK(obj >= -1e-9);
        CHECK(obj <= w.total_weight() + 1e-9);
    }
}

TEST_CASE("rotation invariance of the objective") {
    const auto w = oracles::random_weights(7, 3);
    const auto v = oracles::random_unit_columns(7, 7, 9);
    const double before = relaxed_objective(w, v);

    // Random orthogonal map via Gram-Schmidt on Gaussian columns.
    const std::size_t k = v.ambient_dim;
    Rng rng(123);
    Matrix q(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<double> col(k);
        for (auto& x : col) x = rng.next_gaussian();
        for (std::size_t prev = 0; prev < c; ++prev) {
            double d = 0.0;
            for (std::size_t i = 0; i < k; ++i) d += q(i, prev) * col[i];
            for (std::size_t i = 0; i < k; ++i) col[i] -= d * q(i, prev);
        }
        double nrm = 0.0;
        for (const double x : col) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < k; ++i) q(i, c) = col[i] / nrm;
    }
    EmbeddingMatrix rotated = v;
    for (std::size_t c = 0; c < v.count; ++c) {
        const auto src = v.column(c);
        auto dst = rotated.column(c);
        for (std::size_t i = 0; i < k; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < k; ++j) s += q(i, j) * src[j];
            dst[i] = s;
        }
    }
    CHECK(relaxed_objective(w, rotated) == doctest::Approx(before).epsilon(1e-9));
}

TEST_CASE("solver finds the antipodal optimum for a single edge") {
    const auto res = solve_relaxation(k2_unit(), {.seed = 3});
    CHECK(res.converged);
    CHECK(res.objective == doctest::Approx(1.0).epsilon(1e-6));
    const double d = dot(res.embedding.column(0), res.embedding.column(1));
    CHECK(d == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("solver reaches the triangle optimum 9/4") {
    const auto res = solve_relaxation(k3_unit(), {.rank = 3, .seed = 1});
    CHECK(res.converged);
    CHECK(res.objective == doctest::Approx(2.25).epsilon(1e-5));
}

TEST_CASE("relaxation upper-bounds the exact MaxCut") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto w = oracles::random_weights(10, 100 + seed);
        const auto res = solve_relaxation(w, {.seed = seed});
        const auto exact = brute_force_maxcut(w);
        CHECK(res.objective >= exact.value - 1e-6);
    }
}

TEST_CASE("per-sweep objective trace is non-decreasing") {
    const auto w = oracles::random_weights(12, 77);
    const auto res = solve_relaxation(w, {.seed = 8});
    REQUIRE(res.objective_trace.size() >= 2);
    for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
        CHECK(res.objective_trace[i] >= res.objective_trace[i - 1] - 1e-12);
    CHECK(res.objective == res.objective_trace.back());
}

TEST_CASE("converged solves are first-order stationary") {
    const auto w = oracles::random_weights(10, 21);
    const auto res = solve_relaxation(w, {.seed = 2});
    REQUIRE(res.converged);
    CHECK(stationarity_residual(w, res.embedding) <= 1e-6);
    for (std::size_t i = 0; i < res.embedding.count; ++i)
        CHECK(norm2(res.embedding.column(i)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("exhausting max_sweeps flags non-convergence instead of failing") {
    const auto w = oracles::random_weights(10, 31);
    const auto res = solve_relaxation(w, {.max_sweeps = 1, .seed = 5});
    CHECK_FALSE(res.converged);
    CHECK(res.sweeps == 1);
    CHECK(res.objective > 0.0);
}

TEST_CASE("solver is deterministic per seed") {
    const auto w = oracles::random_weights(8, 55);
    const auto a = solve_relaxation(w, {.seed = 42});
    const auto b = solve_relaxation(w, {.seed = 42});
    CHECK(a.embedding == b.embedding);
    CHECK(a.objective == b.objective);
    const auto c = solve_relaxation(w, {.seed = 43});
    CHECK(a.embedding.data != c.embedding.data);
}

TEST_CASE("padding leaves the relaxed optimum unchanged") {
    const auto ps = oracles::random_points(10, 3, 4);
    const auto w = build_weight_matrix(ps);
    const double base = solve_relaxation(w, {.seed = 6}).objective;
    for (const std::size_t m : {std::size_t{10}, std::size_t{14}, std::size_t{19}}) {
        const auto padded = pad_weights(w, m);
        const double obj = solve_relaxation(padded, {.seed = 6}).objective;
        CHECK(obj == doctest::Approx(base).epsilon(1e-5));
    }
}

TEST_CASE("phantom padded columns stay at their initialization") {
    const auto ps = oracles::random_points(6, 2, 12);
    const auto w = pad_weights(build_weight_matrix(ps), 9);
    const auto one = solve_relaxation(w, {.max_sweeps = 1, .seed = 9});
    const auto full = solve_relaxation(w, {.seed = 9});
    for (std::size_t i = 6; i < 9; ++i) {
        const auto a = one.embedding.column(i);
        const auto b = full.embedding.column(i);
        for (std::size_t d = 0; d < a.size(); ++d) CHECK(a[d] == b[d]);
    }
}

TEST_CASE("gram matrix basics") {
    SUBCASE("orthonormal columns give the identity") {
        EmbeddingMatrix v;
        v.ambient_dim = 3;
        v.count = 3;
        v.data = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        CHECK(gram_matrix(v) == Matrix::identity(3));
    }
    SUBCASE("equal columns give the all-ones matrix") {
        EmbeddingMatrix v;
        v.ambient_dim = 2;
        v.count = 2;
        v.data = {0.6, 0.8, 0.6, 0.8};
        const auto x = gram_matrix(v);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(x(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("triangle configuration has -1/2 off-diagonals") {
        const auto x = gram_matrix(k3_embedding());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(x(i, j) == doctest::Approx(i == j ? 1.0 : -0.5).epsilon(1e-9));
    }
}

TEST_CASE("cholesky_embed of the identity is the identity") {
    const auto v = cholesky_embed(Matrix::identity(4));
    CHECK(gram_matrix(v) == Matrix::identity(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t d = 0; d < 4; ++d)
            CHECK(v.column(i)[d] == (i == d ? 1.0 : 0.0));
}

TEST_CASE("cholesky_embed of the all-ones matrix yields equal columns") {
    Matrix x(2, 2, 1.0);
    const auto v = cholesky_embed(x);
    CHECK(dot(v.column(0), v.column(1)) == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t d = 0; d < 2; ++d)
        CHECK(v.column(0)[d] == doctest::Approx(v.column(1)[d]).epsilon(1e-4));
}

TEST_CASE("gram/cholesky round trip on random unit vectors") {
    const auto v = oracles::random_unit_columns(8, 8, 19);
    const auto x = gram_matrix(v);
    const auto back = gram_matrix(cholesky_embed(x));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(std::abs(back(i, j) - x(i, j)) <= 1e-6);
}

TEST_CASE("round trip through a singular gram matrix") {
    // Duplicated vectors make X rank deficient.
    auto v = oracles::random_unit_columns(3, 6, 23);
    const auto src = v.column(0);
    auto dup = v.column(5);
    for (std::size_t d = 0; d < 3; ++d) dup[d] = src[d];
    const auto x = gram_matrix(v);
    const auto back = gram_matrix(cholesky_embed(x));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(back(i, j) - x(i, j)) <= 1e-6);
}

TEST_CASE("cholesky_embed rejects an indefinite matrix") {
    Matrix x(2, 2);
    x(0, 0) = x(1, 1) = 1.0;
    x(0, 1) = x(1, 0) = 2.0; // eigenvalues 3 and -1
    CHECK_THROWS_AS(cholesky_embed(x), numeric_error);
}

TEST_CASE("cholesky_embed validates its input") {
    Matrix asym(2, 2);
    asym(0, 0) = asym(1, 1) = 1.0;
    asym(0, 1) = 0.5;
    asym(1, 0) = 0.25;
    CHECK_THROWS_AS(cholesky_embed(asym), input_error);

    Matrix diag = Matrix::identity(2);
    diag(0, 0) = 1.5;
    CHECK_THROWS_AS(cholesky_embed(diag), input_error);
}
