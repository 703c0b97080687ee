#include "gwcut/datasets.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gwcut/errors.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

namespace {

double exact_cut_of_mask(const WeightMatrix& w, std::uint64_t mask) {
    const std::size_t n = w.size();
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool si = i > 0 && (mask >> (i - 1)) & 1u;
        const auto row = w.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool sj = (mask >> (j - 1)) & 1u;
            if (si != sj) c += row[j];
        }
    }
    return c;
}

} // namespace

ExactCutResult brute_force_maxcut(const WeightMatrix& w) {
    const std::size_t n = w.size();
    if (n > 22)
        throw capacity_error("brute_force_maxcut: size " + std::to_string(n) +
                             " exceeds the enumeration cap of 22");

    ExactCutResult res;
    res.enumerated = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 0;
    res.partition.signs.assign(n, 1);
    if (n < 2) return res;

    // Gray-code walk: one sign flip per step keeps the running cut O(n) to
    // update; candidates near the incumbent are re-evaluated exactly so the
    // reported value and tie-breaks carry no accumulated drift.
    std::vector<int> signs(n, 1);
    double running = 0.0;
    double best = 0.0;          // mask 0: all vertices on one side
    std::uint64_t best_mask = 0;
    const double guard = 1e-9 * (1.0 + w.total_weight());
    const std::uint64_t total = std::uint64_t{1} << (n - 1);

    for (std::uint64_t g = 1; g < total; ++g) {
        const std::size_t vtx = static_cast<std::size_t>(std::countr_zero(g)) + 1;
        double delta = 0.0;
        const auto row = w.row(vtx);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == vtx) continue;
            delta += signs[j] == signs[vtx] ? row[j] : -row[j];
        }
        signs[vtx] = -signs[vtx];
        running += delta;

        if (running >= best - guard) {
            const std::uint64_t mask = g ^ (g >> 1);
            const double exact = exact_cut_of_mask(w, mask);
            if (exact > best || (exact == best && mask < best_mask)) {
                best = exact;
                best_mask = mask;
            }
            running = exact; // resync at every candidate
        } else if ((g & 0x1fffu) == 0) {
            running = exact_cut_of_mask(w, g ^ (g >> 1)); // bound the drift
        }
    }

    res.value = best;
    res.partition.cut_value = best;
    for (std::size_t i = 1; i < n; ++i)
        res.partition.signs[i] = (best_mask >> (i - 1)) & 1u ? -1 : 1;
    return res;
}

LabeledPoints gen_two_cubes(std::size_t count, double separation, double edge,
                            std::uint64_t seed) {
    if (count == 0 || count % 2 != 0)
        throw input_error("gen_two_cubes: count must be positive and even, got " +
                          std::to_string(count));

    Rng rng(seed);
    LabeledPoints out;
    out.points.dim = 3;
    out.points.points.reserve(count);
    out.labels.reserve(count);
    const double centers[2] = {0.0, separation};
    for (int cube = 0; cube < 2; ++cube) {
        for (std::size_t k = 0; k < count / 2; ++k) {
            std::vector<double> p(3);
            p[0] = centers[cube] + (rng.next_unit() - 0.5) * edge;
            p[1] = (rng.next_unit() - 0.5) * edge;
            p[2] = (rng.next_unit() - 0.5) * edge;
            out.points.points.push_back(std::move(p));
            out.labels.push_back(cube);
        }
    }
    return out;
}

LabeledPoints gen_moons(std::size_t count, double noise, std::uint64_t seed) {
    if (count == 0 || count % 2 != 0)
        throw input_error("gen_moons: count must be positive and even, got " +
                          std::to_string(count));

    Rng rng(seed);
    LabeledPoints out;
    out.points.dim = 2;
    out.points.points.reserve(count);
    out.labels.reserve(count);
    const std::size_t half = count / 2;
    for (int arc = 0; arc < 2; ++arc) {
        for (std::size_t k = 0; k < half; ++k) {
            const double t = half > 1
                                 ? std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(half - 1)
                                 : 0.0;
            double x, y;
            if (arc == 0) {
                x = std::cos(t);
                y = std::sin(t);
            } else {
                x = 1.0 - std::cos(t);
                y = 0.5 - std::sin(t);
            }
            if (noise > 0.0) {
                x += noise * rng.next_gaussian();
                y += noise * rng.next_gaussian();
            }
            out.points.points.push_back({x, y});
            out.labels.push_back(arc);
        }
    }
    return out;
}

} // namespace gwcut
