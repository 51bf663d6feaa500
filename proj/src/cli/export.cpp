#include "qlps/cli/export.hpp"

#include <cstdio>
#include <sstream>

namespace qlps {

std::set<ExportFormat> parse_formats(const std::string& list) {
    std::set<ExportFormat> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "ppm") out.insert(ExportFormat::ppm);
        else if (item == "csv") out.insert(ExportFormat::csv);
        else if (!item.empty()) throw ConfigError("export", "unknown format '" + item + "'");
    }
    if (out.empty()) throw ConfigError("export", "at least one format is required");
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_marginals_csv(std::ostream& out, const std::vector<Marginal2D>& marginals) {
    out << "ax,ay";
    for (std::size_t k = 0; k < marginals.size(); ++k) out << ",p" << (k + 1);
    out << '\n';
    if (marginals.empty()) return;
    const GridSpec& g = marginals.front().grid;
    for (int ay = 0; ay < g.n; ++ay) {
        for (int ax = 0; ax < g.m; ++ax) {
            out << ax << ',' << ay;
            for (const auto& m : marginals) out << ',' << format_double(m.at(ax, ay));
            out << '\n';
        }
    }
}

void write_stats_header(std::ostream& out, std::size_t n) {
    out << "frame,t,pre_norm,total_energy";
    for (std::size_t k = 0; k < n; ++k) out << ",kin_" << k;
    for (std::size_t k = 0; k < n; ++k) out << ",ex_" << k << ",ey_" << k;
    out << ",cm_x,cm_y\n";
}

void write_stats_row(std::ostream& out, std::uint64_t frame, const FrameStats& s) {
    out << frame << ',' << format_double(s.t) << ',' << format_double(s.pre_norm) << ',' << format_double(s.total_energy);
    for (double k : s.kinetic) out << ',' << format_double(k);
    for (const Point2& p : s.expected_pos) out << ',' << format_double(p.x) << ',' << format_double(p.y);
    out << ',' << format_double(s.cm.x) << ',' << format_double(s.cm.y) << '\n';
}

void write_measurements_header(std::ostream& out, std::size_t n) {
    out << "frame,ax,ay,detected";
    for (std::size_t k = 0; k < n; ++k) out << ",p_" << k;
    out << '\n';
}

void write_measurement_row(std::ostream& out, std::uint64_t frame, const MeasurementOutcome& o) {
    out << frame << ',' << o.cell.ax << ',' << o.cell.ay << ',';
    if (o.detected) out << *o.detected;
    else out << -1;
    for (double p : o.probs) out << ',' << format_double(p);
    out << '\n';
}

std::string frame_file_name(std::uint64_t frame, const char* extension) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "frame_%05llu.%s", static_cast<unsigned long long>(frame), extension);
    return buf;
}

} // namespace qlps
