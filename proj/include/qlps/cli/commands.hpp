#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qlps/cli/export.hpp"

namespace qlps {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitRuntime = 2, kExitIo = 3 };

struct RunOptions {
    std::filesystem::path config;
    std::optional<std::filesystem::path> scenario;
    std::uint64_t frames = 100;
    std::optional<ExportSpec> exports;  // stats.csv is always written to out_dir
    std::filesystem::path out_dir = "out";
    std::optional<std::uint64_t> seed;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

enum class OracleState { random, gaussian, plane_wave };

struct OracleOptions {
    int m = 3;
    int n = 3;
    std::size_t particles = 2;
    std::vector<double> dts;  // empty: choose_dt(0.1) and its half
    double spring_k = 1.0;
    OracleState state = OracleState::random;
    std::uint64_t seed = 1;
    int long_steps = 10;
};

struct OracleRow {
    double dt = 0.0;
    double single_step_error = 0.0;
    double multi_step_error = 0.0;
    std::optional<double> ratio;  // error(previous dt) / error(this dt)
};

struct OracleReport {
    std::size_t state_size = 0;
    std::vector<OracleRow> rows;
};

/// Compares Euler steps with exact dense evolution. Throws InvalidArgument
/// ("oracle scale exceeded") for states above the dense limit.
OracleReport run_oracle(const OracleOptions& opts);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Parses "0.01,0.005"; the token "auto" stands for choose_dt(alpha = 0.1).
std::vector<double> parse_dt_list(const std::string& list);
/// Parses "3x3".
std::pair<int, int> parse_grid(const std::string& text);

struct BenchOptions {
    std::filesystem::path config;
    std::uint64_t frames = 10;
    bool compare_reference = true;
};

struct BenchReport {
    std::size_t state_size = 0;
    std::uint64_t steps = 0;
    double seconds = 0.0;
    double steps_per_second = 0.0;
    double stencil_points_per_second = 0.0;  // amplitudes * (1 + 4N) per second
    std::uint64_t checksum = 0;              // FNV-1a of the final amplitudes
    std::optional<double> reference_speedup;
    int threads = 1;
};

BenchReport run_bench(const SessionConfig& config, std::uint64_t frames, bool compare_reference);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

struct ServeOptions {
    std::optional<std::filesystem::path> config;
    std::string address = "127.0.0.1";
    unsigned short port = 8765;
    double fps = 20.0;
};

int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err);

/// Built-in three-particle configuration used when serve gets no --config.
SessionConfig demo_config();

} // namespace qlps
