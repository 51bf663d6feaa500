#pragma once

#include <filesystem>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "qlps/observables.hpp"
#include "qlps/session/scenario.hpp"

namespace qlps {

enum class ExportFormat { ppm, csv };

struct ExportSpec {
    std::set<ExportFormat> formats;
    std::filesystem::path out_dir = "out";
    double gamma = 0.5;
    int every_k_frames = 1;
};

/// Parses "ppm,csv". Throws ConfigError on unknown names or an empty list.
std::set<ExportFormat> parse_formats(const std::string& list);

/// %.17g, enough digits to round-trip a double.
std::string format_double(double v);

/// `ax,ay,p1..pN`, rows ordered ay outer, ax inner.
void write_marginals_csv(std::ostream& out, const std::vector<Marginal2D>& marginals);

/// `frame,t,pre_norm,total_energy,kin_0..kin_{N-1},ex_0,ey_0,..,cm_x,cm_y`.
void write_stats_header(std::ostream& out, std::size_t n_particles);
void write_stats_row(std::ostream& out, std::uint64_t frame, const FrameStats& stats);

/// `frame,ax,ay,detected,p_0..p_{N-1}`; detected is -1 for no detection.
void write_measurements_header(std::ostream& out, std::size_t n_particles);
void write_measurement_row(std::ostream& out, std::uint64_t frame, const MeasurementOutcome& outcome);

/// frame_00012.csv style names.
std::string frame_file_name(std::uint64_t frame, const char* extension);

} // namespace qlps
