#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gwcut/datasets.hpp"
#include "gwcut/errors.hpp"
#include "oracles.hpp"

using namespace gwcut;

namespace {

WeightMatrix from_dense(std::size_t n, std::initializer_list<double> upper) {
    Matrix m(n, n);
    auto it = upper.begin();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = m(j, i) = *it++;
        }
    return validate_weights(m);
}

} // namespace

TEST_CASE("brute force on a single edge") {
    const auto res = brute_force_maxcut(from_dense(2, {1.0}));
    CHECK(res.value == 1.0);
    CHECK(res.enumerated == 2);
    CHECK(res.partition.signs[0] == 1);
    CHECK(res.partition.signs[1] == -1);
}

TEST_CASE("brute force on the unit triangle") {
    const auto res = brute_force_maxcut(from_dense(3, {1.0, 1.0, 1.0}));
    CHECK(res.value == 2.0);
    CHECK(res.enumerated == 4);
    // Smallest encoding among the tied 2-vs-1 splits: only vertex 1 flipped.
    CHECK(res.partition.signs == std::vector<int>{1, -1, 1});
    CHECK(res.partition.cut_value == 2.0);
}

TEST_CASE("brute force agrees with the naive increasing-mask oracle") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const std::size_t n = 4 + seed % 7; // 4..10
        const auto w = oracles::random_weights(n, 1000 + seed);
        const auto fast = brute_force_maxcut(w);
        const auto naive = oracles::naive_maxcut(w);
        CHECK(fast.value == doctest::Approx(naive.value).epsilon(1e-12));
        std::uint64_t fast_mask = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (fast.partition.signs[i] < 0) fast_mask |= std::uint64_t{1} << (i - 1);
        CHECK(fast_mask == naive.mask);
    }
}

TEST_CASE("brute force refuses beyond the capacity cap") {
    const auto w = pad_weights(from_dense(2, {1.0}), 23);
    CHECK_THROWS_AS(brute_force_maxcut(w), capacity_error);
}

TEST_CASE("brute force value scales linearly with the weights") {
    const auto w = oracles::random_weights(9, 1100);
    Matrix scaled(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) scaled(i, j) = 4.0 * w(i, j);
    const auto a = brute_force_maxcut(w);
    const auto b = brute_force_maxcut(validate_weights(scaled));
    CHECK(b.value == doctest::Approx(4.0 * a.value).epsilon(1e-12));
    CHECK(b.partition.signs == a.partition.signs);
}

TEST_CASE("partition value is recomputable from the signs") {
    const auto w = oracles::random_weights(10, 1200);
    const auto res = brute_force_maxcut(w);
    CHECK(cut_value(w, res.partition.signs) == res.value);
}

TEST_CASE("two cubes: shape, labels and determinism") {
    const auto data = gen_two_cubes(100, 4.0, 1.0, 9);
    CHECK(data.points.count() == 100);
    CHECK(data.points.dim == 3);
    int counts[2] = {0, 0};
    for (const int l : data.labels) ++counts[l];
    CHECK(counts[0] == 50);
    CHECK(counts[1] == 50);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(std::abs(data.points.points[i][0]) <= 0.5);
        CHECK(std::abs(data.points.points[50 + i][0] - 4.0) <= 0.5);
    }
    const auto again = gen_two_cubes(100, 4.0, 1.0, 9);
    CHECK(again.points.points == data.points.points);
    CHECK_THROWS_AS(gen_two_cubes(7), input_error);
}

TEST_CASE("well-separated cubes: planted split is the exact MaxCut of subsamples") {
    const auto data = gen_two_cubes(100, 8.0, 1.0, 3);
    // 8 points from each cube.
    PointSet sub{3, {}};
    for (std::size_t i = 0; i < 8; ++i) sub.points.push_back(data.points.points[i]);
    for (std::size_t i = 0; i < 8; ++i) sub.points.push_back(data.points.points[50 + i]);
    const auto res = brute_force_maxcut(build_weight_matrix(sub));
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(res.partition.signs[i] == res.partition.signs[0]);
        CHECK(res.partition.signs[8 + i] == -res.partition.signs[0]);
    }
}

TEST_CASE("moons: noiseless points lie on the parametric arcs") {
    const auto data = gen_moons(100, 0.0, 5);
    CHECK(data.points.count() == 100);
    CHECK(data.points.dim == 2);
    for (std::size_t k = 0; k < 50; ++k) {
        const double t = std::numbers::pi * static_cast<double>(k) / 49.0;
        CHECK(data.points.points[k][0] == doctest::Approx(std::cos(t)).epsilon(1e-12));
        CHECK(data.points.points[k][1] == doctest::Approx(std::sin(t)).epsilon(1e-12));
        CHECK(data.points.points[50 + k][0] ==
              doctest::Approx(1.0 - std::cos(t)).epsilon(1e-12));
        CHECK(data.points.points[50 + k][1] ==
              doctest::Approx(0.5 - std::sin(t)).epsilon(1e-12));
        CHECK(data.labels[k] == 0);
        CHECK(data.labels[50 + k] == 1);
    }
}

TEST_CASE("moons: interlocking geometry, determinism, validation") {
    const auto a = gen_moons(100, 0.05, 8);
    const auto b = gen_moons(100, 0.05, 8);
    CHECK(a.points.points == b.points.points);
    const auto c = gen_moons(100, 0.05, 9);
    CHECK(a.points.points != c.points.points);
    CHECK_THROWS_AS(gen_moons(11), input_error);

    // The arcs overlap horizontally (interlock) but are offset vertically.
    double arc0_xmax = -1e9, arc1_xmin = 1e9;
    for (std::size_t k = 0; k < 50; ++k) {
        arc0_xmax = std::max(arc0_xmax, a.points.points[k][0]);
        arc1_xmin = std::min(arc1_xmin, a.points.points[50 + k][0]);
    }
    CHECK(arc1_xmin < arc0_xmax);
}

TEST_CASE("generated point sets pass weight-matrix construction") {
    const auto cubes = gen_two_cubes(20, 4.0, 1.0, 2);
    const auto moons = gen_moons(20, 0.05, 2);
    CHECK_NOTHROW(build_weight_matrix(cubes.points));
    CHECK_NOTHROW(build_weight_matrix(moons.points));
}
