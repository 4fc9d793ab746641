#include "qchoice/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace qchoice {

const std::vector<std::string> kCsvColumns = {
    "model", "draw_index", "src1", "src2", "src3", "src4", "src5", "src6", "p1", "p2", "p3", "p4",
    "p5",    "p6",         "q0",   "q1",   "q2",   "reject_reason", "class1", "class2",
};

TernaryPoint ternary_xy(const FrequencyTriple& q) noexcept {
    return {q[1] + q[2] / 2.0, std::sqrt(3.0) / 2.0 * q[2]};
}

namespace {

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view field) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw std::runtime_error("malformed number in CSV: '" + std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

const char* label_colour(ClassLabel label) {
    switch (label) {
        case ClassLabel::IntransitiveForward: return "#d62728";
        case ClassLabel::IntransitiveReverse: return "#1f77b4";
        case ClassLabel::Transitive: return "#2ca02c";
        case ClassLabel::Degenerate: return "#7f7f7f";
    }
    return "#000000";
}

}  // namespace

void write_csv(std::span<const SampleRecord> records, std::ostream& out) {
    for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
        out << (c ? "," : "") << kCsvColumns[c];
    }
    out << '\n';
    for (const SampleRecord& rec : records) {
        out << to_string(rec.model) << ',' << rec.draw_index;
        for (std::size_t i = 0; i < 6; ++i) {
            out << ',';
            if (i < rec.source_dims()) out << format_real(rec.source[i]);
        }
        for (double p : rec.strategy) out << ',' << format_real(p);
        for (std::size_t i = 0; i < 3; ++i) {
            out << ',';
            if (rec.frequencies) out << format_real((*rec.frequencies)[i]);
        }
        out << ',';
        if (rec.rejection) out << to_string(*rec.rejection);
        out << ',';
        if (rec.classification) out << to_string(rec.classification->type1);
        out << ',';
        if (rec.classification) out << to_string(rec.classification->type2);
        out << '\n';
    }
}

void emit_csv(std::span<const SampleRecord> records, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_csv(records, out);
    check_written(out, path);
}

std::vector<SampleRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("CSV is empty");
    const auto header = split(line);
    if (header.size() != kCsvColumns.size() || !std::equal(header.begin(), header.end(), kCsvColumns.begin())) {
        throw std::runtime_error("unexpected CSV header");
    }

    std::vector<SampleRecord> records;
    while (std::getline(in, line)) {
        const auto f = split(line);
        if (f.size() != kCsvColumns.size()) throw std::runtime_error("wrong field count in CSV row");
        SampleRecord rec;
        const auto model = parse_model(f[0]);
        if (!model) throw std::runtime_error("unknown model in CSV: " + std::string(f[0]));
        rec.model = *model;
        const auto idx = std::from_chars(f[1].data(), f[1].data() + f[1].size(), rec.draw_index);
        if (idx.ec != std::errc()) throw std::runtime_error("bad draw_index in CSV");
        for (std::size_t i = 0; i < rec.source_dims(); ++i) rec.source[i] = parse_real(f[2 + i]);
        for (std::size_t i = 0; i < 6; ++i) rec.strategy[i] = parse_real(f[8 + i]);
        if (!f[14].empty()) {
            FrequencyTriple q;
            for (std::size_t i = 0; i < 3; ++i) q.q[i] = parse_real(f[14 + i]);
            rec.frequencies = q;
        }
        if (!f[17].empty()) {
            if (f[17] == to_string(NoSolution::SingularSystem)) rec.rejection = NoSolution::SingularSystem;
            else if (f[17] == to_string(NoSolution::OutsideSimplex)) rec.rejection = NoSolution::OutsideSimplex;
            else throw std::runtime_error("unknown reject_reason in CSV");
        }
        if (!f[18].empty() || !f[19].empty()) {
            const auto c1 = parse_class_label(f[18]);
            const auto c2 = parse_class_label(f[19]);
            if (!c1 || !c2) throw std::runtime_error("unknown class label in CSV");
            rec.classification = Classification{*c1, *c2};
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<SampleRecord> parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return read_csv(in);
}

std::pair<double, double> svg_position(const TernaryPoint& p) noexcept {
    return {kSvgMargin + kSvgScale * p.u, kSvgHeight - kSvgMargin - kSvgScale * p.v};
}

void write_svg(std::span<const SampleRecord> records, std::ostream& out, const SvgOptions& options) {
    std::ostringstream body;
    body.precision(6);
    body << std::fixed;

    const auto v0 = svg_position({0.0, 0.0});
    const auto v1 = svg_position({1.0, 0.0});
    const auto v2 = svg_position({0.5, std::sqrt(3.0) / 2.0});

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgWidth << "\" height=\""
        << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        out << "<text x=\"" << kSvgWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"22\">" << options.title << "</text>\n";
    }

    body << "<polygon class=\"simplex\" points=\"" << v0.first << ',' << v0.second << ' ' << v1.first << ','
         << v1.second << ' ' << v2.first << ',' << v2.second << "\" fill=\"none\" stroke=\"black\" "
         << "stroke-width=\"1.5\"/>\n";
    body << "<text x=\"" << v0.first - 10 << "\" y=\"" << v0.second + 25 << "\" font-family=\"sans-serif\" "
         << "font-size=\"18\">q0</text>\n"
         << "<text x=\"" << v1.first - 10 << "\" y=\"" << v1.second + 25 << "\" font-family=\"sans-serif\" "
         << "font-size=\"18\">q1</text>\n"
         << "<text x=\"" << v2.first + 10 << "\" y=\"" << v2.second << "\" font-family=\"sans-serif\" "
         << "font-size=\"18\">q2</text>\n";

    body << "<g class=\"points\" stroke=\"none\">\n";
    for (const SampleRecord& rec : records) {
        if (!rec.frequencies) continue;
        const auto [x, y] = svg_position(ternary_xy(*rec.frequencies));
        const char* colour = "#000000";
        if (options.color_by_type != 0 && rec.classification) {
            colour = label_colour(rec.classification->of_type(options.color_by_type));
        }
        body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << options.radius << "\" fill=\"" << colour
             << "\"/>\n";
    }
    body << "</g>\n";

    if (options.color_by_type != 0) {
        body << "<g class=\"key\" font-family=\"sans-serif\" font-size=\"14\">\n";
        double y = 60.0;
        for (ClassLabel l : {ClassLabel::IntransitiveForward, ClassLabel::IntransitiveReverse, ClassLabel::Transitive,
                             ClassLabel::Degenerate}) {
            body << "<circle cx=\"" << 760.0 << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << label_colour(l) << "\"/>"
                 << "<text x=\"" << 772.0 << "\" y=\"" << y + 5 << "\">" << to_string(l) << "</text>\n";
            y += 22.0;
        }
        body << "</g>\n";
    }
    out << body.str() << "</svg>\n";
}

void emit_svg(std::span<const SampleRecord> records, const std::filesystem::path& path, const SvgOptions& options) {
    auto out = open_for_write(path);
    write_svg(records, out, options);
    check_written(out, path);
}

}  // namespace qchoice
