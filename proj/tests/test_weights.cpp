#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwcut/errors.hpp"
#include "gwcut/weights.hpp"
#include "oracles.hpp"

using namespace gwcut;

TEST_CASE("identical points have zero distance") {
    PointSet ps{2, {{1.0, 2.0}, {1.0, 2.0}}};
    const auto w = build_weight_matrix(ps);
    CHECK(w(0, 1) == 0.0);
    CHECK(w(1, 0) == 0.0);
}

TEST_CASE("3-4-5 triangle distance") {
    PointSet ps{2, {{0.0, 0.0}, {3.0, 4.0}}};
    const auto w = build_weight_matrix(ps);
    CHECK(w(0, 1) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("random points match the double-loop distance oracle") {
    const auto ps = oracles::random_points(5, 3, 42);
    const auto w = build_weight_matrix(ps);
    const auto table = oracles::naive_distance_table(ps);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(w(i, j) - table(i, j)) <= 1e-12);
}

TEST_CASE("squared euclidean metric") {
    PointSet ps{2, {{0.0, 0.0}, {3.0, 4.0}}};
    const auto w = build_weight_matrix(ps, Metric::squared_euclidean);
    CHECK(w(0, 1) == doctest::Approx(25.0).epsilon(1e-15));
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(build_weight_matrix(PointSet{2, {{0.0, 0.0}}}), input_error);
    PointSet mismatch{2, {{0.0, 0.0}, {1.0}}};
    CHECK_THROWS_AS(build_weight_matrix(mismatch), input_error);
}

TEST_CASE("validate rejects nonzero diagonal naming the index") {
    auto m = Matrix::identity(3);
    try {
        validate_weights(m);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
    }
}

TEST_CASE("validate accepts a symmetric zero-diagonal matrix unchanged") {
    Matrix m(3, 3);
    m(0, 1) = m(1, 0) = 1.5;
    m(0, 2) = m(2, 0) = 2.5;
    m(1, 2) = m(2, 1) = 0.25;
    const auto w = validate_weights(m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(w(i, j) == m(i, j));
}

TEST_CASE("validate symmetrizes asymmetry inside tolerance") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0 + 1e-12;
    const auto w = validate_weights(m);
    const double expect = 0.5 * (1.0 + (1.0 + 1e-12));
    CHECK(w(0, 1) == expect);
    CHECK(w(1, 0) == expect);
}

TEST_CASE("validate rejects asymmetry beyond tolerance") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_AS(validate_weights(m), input_error);
}

TEST_CASE("validate rejects negative entries") {
    Matrix m(2, 2);
    m(0, 1) = m(1, 0) = -0.5;
    CHECK_THROWS_AS(validate_weights(m), input_error);
}

TEST_CASE("validate rejects non-square and non-finite input") {
    CHECK_THROWS_AS(validate_weights(Matrix(2, 3)), input_error);
    Matrix m(2, 2);
    m(0, 1) = m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_weights(m), input_error);
}

TEST_CASE("built matrices pass validation") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto ps = oracles::random_points(8, 4, seed);
        const auto w = build_weight_matrix(ps);
        Matrix raw(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) raw(i, j) = w(i, j);
        CHECK_NOTHROW(validate_weights(raw));
    }
}

TEST_CASE("triangle inequality holds on random point sets") {
    const auto ps = oracles::random_points(10, 3, 7);
    const auto w = build_weight_matrix(ps);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            for (std::size_t k = 0; k < 10; ++k)
                CHECK(w(i, k) <= w(i, j) + w(j, k) + 1e-9);
}

TEST_CASE("scaling points scales every entry by the same factor") {
    const auto ps = oracles::random_points(6, 3, 11);
    const double c = 3.75;
    PointSet scaled = ps;
    for (auto& p : scaled.points)
        for (auto& x : p) x *= c;
    const auto w = build_weight_matrix(ps);
    const auto ws = build_weight_matrix(scaled);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == j) continue;
            CHECK(ws(i, j) == doctest::Approx(c * w(i, j)).epsilon(1e-12));
        }
}

TEST_CASE("pad_weights embeds the original block") {
    Matrix m(2, 2);
    m(0, 1) = m(1, 0) = 2.0;
    const auto w = validate_weights(m);

    SUBCASE("pad to same size is the identity") {
        const auto p = pad_weights(w, 2);
        CHECK(p == w);
    }
    SUBCASE("pad to 4 adds zero rows and columns") {
        const auto p = pad_weights(w, 4);
        CHECK(p.size() == 4);
        CHECK(p(0, 1) == 2.0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 2; j < 4; ++j) {
                CHECK(p(i, j) == 0.0);
                CHECK(p(j, i) == 0.0);
            }
    }
    SUBCASE("pad below current size is an error") {
        CHECK_THROWS_AS(pad_weights(w, 1), input_error);
    }
}
