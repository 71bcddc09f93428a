#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hadamard/tolerance.hpp"

namespace hadamard {

// One row of the common output schema:
// experiment,n,alpha_or_ksigma,shrink_point,estimator,mean_loss,std_error,replicates,seed
struct CsvRow {
    std::string experiment;
    int n = 0;
    std::string alpha_or_ksigma;
    std::string shrink_point;
    std::string estimator;
    double mean_loss = 0.0;
    double std_error = 0.0;
    std::uint64_t replicates = 0;
    std::uint64_t seed = 0;
};

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Leading '#' lines carry the resolved configuration so every file is
// self-describing and reproducible.
inline std::string csv_text(const std::vector<CsvRow>& rows,
                            const std::string& config_json) {
    std::ostringstream out;
    if (!config_json.empty()) {
        out << "# config: " << config_json << "\n";
    }
    out << "experiment,n,alpha_or_ksigma,shrink_point,estimator,mean_loss,"
           "std_error,replicates,seed\n";
    for (const CsvRow& r : rows) {
        out << r.experiment << ',' << r.n << ',' << r.alpha_or_ksigma << ','
            << r.shrink_point << ',' << r.estimator << ',' << format_double(r.mean_loss)
            << ',' << format_double(r.std_error) << ',' << r.replicates << ','
            << r.seed << '\n';
    }
    return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    require(f.good(), "cannot open output file: " + path);
    f << text;
    require(f.good(), "failed writing output file: " + path);
}

inline std::string json_mirror_text(const std::vector<CsvRow>& rows,
                                    const std::string& config_json) {
    std::ostringstream out;
    out << "{\n  \"config\": " << (config_json.empty() ? "null" : config_json)
        << ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CsvRow& r = rows[i];
        out << "    {\"experiment\": \"" << r.experiment << "\", \"n\": " << r.n
            << ", \"alpha_or_ksigma\": \"" << r.alpha_or_ksigma
            << "\", \"shrink_point\": \"" << r.shrink_point << "\", \"estimator\": \""
            << r.estimator << "\", \"mean_loss\": " << format_double(r.mean_loss)
            << ", \"std_error\": " << format_double(r.std_error)
            << ", \"replicates\": " << r.replicates << ", \"seed\": " << r.seed << "}"
            << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

// Minimal line plot: one polyline per series over a shared x grid.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

inline std::string svg_line_plot(const std::vector<SvgSeries>& series,
                                 const std::string& title) {
    const double W = 640, H = 420, ml = 60, mr = 150, mt = 40, mb = 40;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmin > xmax) return "<svg xmlns='http://www.w3.org/2000/svg'/>";
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto sy = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << W / 2 << "' y='22' text-anchor='middle' font-size='15'>"
        << title << "</text>\n";
    out << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='"
        << H - mb << "' stroke='black'/>\n";
    out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
        << "' stroke='black'/>\n";
    for (int g = 0; g <= 4; ++g) {
        double xv = xmin + g * (xmax - xmin) / 4, yv = ymin + g * (ymax - ymin) / 4;
        out << "<text x='" << sx(xv) << "' y='" << H - mb + 16
            << "' text-anchor='middle' font-size='11'>" << format_double(xv)
            << "</text>\n";
        out << "<text x='" << ml - 6 << "' y='" << sy(yv) + 4
            << "' text-anchor='end' font-size='11'>" << format_double(yv)
            << "</text>\n";
    }
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* col = colors[k % 8];
        out << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << sx(s.x[i]) << ',' << sy(s.y[i]) << ' ';
        out << "'/>\n";
        out << "<text x='" << W - mr + 10 << "' y='" << mt + 16 * k + 10
            << "' font-size='12' fill='" << col << "'>" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hadamard
