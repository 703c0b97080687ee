#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gwcut/matrix.hpp"
#include "gwcut/relaxation.hpp"
#include "gwcut/rounding.hpp"
#include "gwcut/vectorizer.hpp"
#include "gwcut/weights.hpp"

namespace gwcut {

// Shortest round-trip decimal representation; "-0" is normalized to "0".
std::string format_double(double v);

// One point per row, comma-separated coordinates. Errors name file and row.
PointSet read_points_csv(const std::filesystem::path& path, bool header = false);

// Rectangular numeric CSV.
Matrix read_matrix_csv(const std::filesystem::path& path);

void write_points_csv(const std::filesystem::path& path, const PointSet& points);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
void write_weights_csv(const std::filesystem::path& path, const WeightMatrix& w);

// Header "index,sign,cluster"; cluster A for +1, B for -1.
void write_partition_csv(const std::filesystem::path& path, const CutPartition& partition);

// Header "index,label".
void write_labels_csv(const std::filesystem::path& path, const std::vector<int>& labels);

// One column vector per row.
void write_embedding_csv(const std::filesystem::path& path, const EmbeddingMatrix& v);

// Header "id,p_<context>...,anchor_count" with '-' mapped to '_' in names.
void write_vectors_csv(const std::filesystem::path& path, const TargetList& targets,
                       const std::vector<ArticleVector>& vectors);

} // namespace gwcut
