#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qchoice/experiments.hpp"

namespace qchoice {

/// Planar image of a barycentric triple: q0 -> (0,0), q1 -> (1,0),
/// q2 -> (1/2, sqrt(3)/2).
struct TernaryPoint {
    double u = 0.0;
    double v = 0.0;
};

TernaryPoint ternary_xy(const FrequencyTriple& q) noexcept;

/// CSV columns, in order.
extern const std::vector<std::string> kCsvColumns;

void write_csv(std::span<const SampleRecord> records, std::ostream& out);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(std::span<const SampleRecord> records, const std::filesystem::path& path);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
std::vector<SampleRecord> read_csv(std::istream& in);
std::vector<SampleRecord> parse_csv(const std::filesystem::path& path);

struct SvgOptions {
    double radius = 2.0;
    /// 0 draws every point black; 1 or 2 colours points by that preference type.
    int color_by_type = 0;
    std::string title;
};

inline constexpr double kSvgWidth = 1000.0;
inline constexpr double kSvgHeight = 900.0;
inline constexpr double kSvgMargin = 50.0;
/// Viewport units per unit of ternary side length.
inline constexpr double kSvgScale = kSvgWidth - 2 * kSvgMargin;

/// Viewport position of a ternary point (SVG y axis points down).
std::pair<double, double> svg_position(const TernaryPoint& p) noexcept;

void write_svg(std::span<const SampleRecord> records, std::ostream& out, const SvgOptions& options = {});
void emit_svg(std::span<const SampleRecord> records, const std::filesystem::path& path,
              const SvgOptions& options = {});

}  // namespace qchoice
