#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "gwcut/weights.hpp"

namespace gwcut {

// Cluster-colored 2D scatter plot. Points of dimension > 2 are projected
// orthographically onto their first two coordinates. Output is byte-for-byte
// deterministic for identical inputs.
void write_scatter_svg(const std::filesystem::path& path, const PointSet& coords,
                       std::span<const int> signs, std::string_view x_label = "PC1",
                       std::string_view y_label = "PC2", std::string_view title = "");

} // namespace gwcut
