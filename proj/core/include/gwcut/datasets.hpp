#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gwcut/rounding.hpp"
#include "gwcut/weights.hpp"

namespace gwcut {

struct ExactCutResult {
    CutPartition partition;
    double value = 0.0;
    std::uint64_t enumerated = 0; // 2^(n-1) sign assignments examined
};

// Exact MaxCut by enumeration over all 2^(n-1) sign assignments (vertex 0
// fixed to +1). Ties resolve to the smallest binary encoding, where bit k of
// the encoding is set iff vertex k+1 has sign -1. Hard cap n <= 22.
ExactCutResult brute_force_maxcut(const WeightMatrix& w);

struct LabeledPoints {
    PointSet points;
    std::vector<int> labels; // planted cluster, 0 or 1
};

// count/2 points uniform in each of two axis-aligned 3D cubes of side `edge`
// whose centers sit `separation` apart on the first axis. The default
// separation of 4 edge lengths makes the planted cut unambiguous.
LabeledPoints gen_two_cubes(std::size_t count = 100, double separation = 4.0,
                            double edge = 1.0, std::uint64_t seed = 0);

// Two interlocking half-circle arcs (unit radius; the second arc reflected
// and offset by (1, 0.5)), count/2 points per arc evenly spaced, perturbed
// by Gaussian noise of scale `noise`.
LabeledPoints gen_moons(std::size_t count = 100, double noise = 0.05,
                        std::uint64_t seed = 0);

} // namespace gwcut
