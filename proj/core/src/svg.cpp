#include "gwcut/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "gwcut/csv.hpp"
#include "gwcut/errors.hpp"

namespace gwcut {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;
constexpr const char* kColorA = "#1f77b4";
constexpr const char* kColorB = "#d62728";

// Fixed two-decimal pixel coordinates keep the output stable and compact.
std::string px(double v) {
    const double r = std::round(v * 100.0) / 100.0;
    return format_double(r);
}

} // namespace

void write_scatter_svg(const std::filesystem::path& path, const PointSet& coords,
                       std::span<const int> signs, std::string_view x_label,
                       std::string_view y_label, std::string_view title) {
    const std::size_t n = coords.count();
    if (signs.size() != n)
        throw input_error("write_scatter_svg: " + std::to_string(signs.size()) + " signs for " +
                          std::to_string(n) + " points");
    if (coords.dim < 2) throw input_error("write_scatter_svg: points must have dimension >= 2");

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = coords.points[i][0];
        const double y = coords.points[i][1];
        if (i == 0) {
            xmin = xmax = x;
            ymin = ymax = y;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    const double xpad = (xmax - xmin) > 0.0 ? 0.05 * (xmax - xmin) : 1.0;
    const double ypad = (ymax - ymin) > 0.0 ? 0.05 * (ymax - ymin) : 1.0;
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    const auto sx = [&](double x) {
        return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2.0 * kMargin);
    };
    const auto sy = [&](double y) {
        return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2.0 * kMargin);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path.string());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // Axes frame with min/max tick labels.
    out << "<rect x=\"" << px(kMargin) << "\" y=\"" << px(kMargin) << "\" width=\""
        << px(kWidth - 2.0 * kMargin) << "\" height=\"" << px(kHeight - 2.0 * kMargin)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(kWidth / 2.0) << "\" y=\"" << px(kHeight - 12.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << px(kHeight / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 16 "
        << px(kHeight / 2.0) << ")\">" << y_label << "</text>\n";
    out << "<text x=\"" << px(kMargin) << "\" y=\"" << px(kHeight - kMargin + 18.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(std::round(xmin * 1000.0) / 1000.0) << "</text>\n";
    out << "<text x=\"" << px(kWidth - kMargin) << "\" y=\"" << px(kHeight - kMargin + 18.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(std::round(xmax * 1000.0) / 1000.0) << "</text>\n";
    out << "<text x=\"" << px(kMargin - 6.0) << "\" y=\"" << px(kHeight - kMargin)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(std::round(ymin * 1000.0) / 1000.0) << "</text>\n";
    out << "<text x=\"" << px(kMargin - 6.0) << "\" y=\"" << px(kMargin + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(std::round(ymax * 1000.0) / 1000.0) << "</text>\n";

    if (!title.empty())
        out << "<text x=\"" << px(kWidth / 2.0)
            << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
            << title << "</text>\n";

    for (std::size_t i = 0; i < n; ++i) {
        out << "<circle cx=\"" << px(sx(coords.points[i][0])) << "\" cy=\""
            << px(sy(coords.points[i][1])) << "\" r=\"3\" fill=\""
            << (signs[i] > 0 ? kColorA : kColorB) << "\" fill-opacity=\"0.8\"/>\n";
    }

    // Legend.
    const double lx = kWidth - kMargin - 120.0;
    out << "<circle cx=\"" << px(lx) << "\" cy=\"" << px(kMargin + 14.0) << "\" r=\"4\" fill=\""
        << kColorA << "\"/>\n";
    out << "<text x=\"" << px(lx + 10.0) << "\" y=\"" << px(kMargin + 18.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">cluster A (+1)</text>\n";
    out << "<circle cx=\"" << px(lx) << "\" cy=\"" << px(kMargin + 32.0) << "\" r=\"4\" fill=\""
        << kColorB << "\"/>\n";
    out << "<text x=\"" << px(lx + 10.0) << "\" y=\"" << px(kMargin + 36.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">cluster B (-1)</text>\n";
    out << "</svg>\n";
}

} // namespace gwcut
