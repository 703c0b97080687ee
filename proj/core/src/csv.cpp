#include "gwcut/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "gwcut/errors.hpp"

namespace gwcut {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path.string());
    return out;
}

double parse_cell(const std::string& cell, const std::filesystem::path& path, std::size_t row,
                  std::size_t col) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw input_error(path.string() + ": row " + std::to_string(row) + ", column " +
                          std::to_string(col) + ": cannot parse '" + cell + "' as a number");
    return value;
}

std::vector<std::vector<double>> read_numeric_rows(const std::filesystem::path& path,
                                                   bool skip_header) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path.string());

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (skip_header && lineno == 1) continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        std::vector<double> row;
        std::size_t start = 0;
        std::size_t col = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string cell = line.substr(start, comma == std::string::npos
                                                            ? std::string::npos
                                                            : comma - start);
            row.push_back(parse_cell(cell, path, lineno, ++col));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw input_error(path.string() + ": row " + std::to_string(lineno) + " has " +
                              std::to_string(row.size()) + " columns, expected " +
                              std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error(path.string() + ": no data rows");
    return rows;
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) return "0"; // covers -0.0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

PointSet read_points_csv(const std::filesystem::path& path, bool header) {
    const auto rows = read_numeric_rows(path, header);
    PointSet ps;
    ps.dim = rows.front().size();
    ps.points = rows;
    return ps;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
    const auto rows = read_numeric_rows(path, false);
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void write_points_csv(const std::filesystem::path& path, const PointSet& points) {
    auto out = open_out(path);
    for (const auto& p : points.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out << ',';
            out << format_double(p[j]);
        }
        out << '\n';
    }
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_weights_csv(const std::filesystem::path& path, const WeightMatrix& w) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j) out << ',';
            out << format_double(w(i, j));
        }
        out << '\n';
    }
}

void write_partition_csv(const std::filesystem::path& path, const CutPartition& partition) {
    auto out = open_out(path);
    out << "index,sign,cluster\n";
    for (std::size_t i = 0; i < partition.signs.size(); ++i)
        out << i << ',' << partition.signs[i] << ',' << (partition.signs[i] > 0 ? 'A' : 'B')
            << '\n';
}

void write_labels_csv(const std::filesystem::path& path, const std::vector<int>& labels) {
    auto out = open_out(path);
    out << "index,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

void write_embedding_csv(const std::filesystem::path& path, const EmbeddingMatrix& v) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < v.count; ++i) {
        const auto col = v.column(i);
        for (std::size_t d = 0; d < col.size(); ++d) {
            if (d) out << ',';
            out << format_double(col[d]);
        }
        out << '\n';
    }
}

void write_vectors_csv(const std::filesystem::path& path, const TargetList& targets,
                       const std::vector<ArticleVector>& vectors) {
    auto out = open_out(path);
    out << "id";
    for (const auto& c : targets.contexts) {
        std::string name = c;
        for (auto& ch : name)
            if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
        out << ",p_" << name;
    }
    out << ",anchor_count\n";
    for (const auto& vec : vectors) {
        out << vec.article_id;
        for (const double p : vec.probs) out << ',' << format_double(p);
        out << ',' << vec.anchor_occurrences << '\n';
    }
}

} // namespace gwcut
