// qlps: headless driver for the lattice simulator.
//
//   qlps run --config F [--scenario S] [--frames K] [--export ppm,csv] [--out DIR] [--gamma G] [--every K] [--seed S]
//   qlps oracle --grid MxN --particles N --dt LIST
//   qlps bench --config F --frames K
//   qlps serve [--config F] [--bind ADDR] [--port P] [--fps F]

#include <iostream>

#include <CLI11.hpp>

#include "qlps/cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Interacting quantum particles on a periodic lattice, with click-triggered measurements"};
    app.require_subcommand(1);

    qlps::RunOptions run;
    std::string config, scenario, export_list, out_dir = "out";
    double gamma = 0.5;
    int every = 1;
    std::uint64_t seed = 0;
    auto* run_cmd = app.add_subcommand("run", "Run a scenario headless and export frames and statistics");
    run_cmd->add_option("--config", config, "Config JSON")->required();
    run_cmd->add_option("--scenario", scenario, "Scenario JSON (event list)");
    run_cmd->add_option("--frames", run.frames, "Frames to compute")->capture_default_str();
    run_cmd->add_option("--export", export_list, "Per-frame exports: ppm, csv or ppm,csv");
    run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--gamma", gamma, "Image gamma in (0, 1]")->capture_default_str();
    run_cmd->add_option("--every", every, "Export every k-th frame")->check(CLI::PositiveNumber)->capture_default_str();
    auto* seed_opt = run_cmd->add_option("--seed", seed, "Override the config RNG seed");

    qlps::OracleOptions oracle;
    std::string grid = "3x3", dts;
    std::string state = "random";
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare Euler steps against exact dense evolution");
    oracle_cmd->add_option("--grid", grid, "Grid as MxN")->capture_default_str();
    oracle_cmd->add_option("--particles", oracle.particles, "Particle count")->capture_default_str();
    oracle_cmd->add_option("--dt", dts, "Comma-separated time steps; 'auto' is the chosen dt (default: auto and half of it)");
    oracle_cmd->add_option("--spring", oracle.spring_k, "Spring constant of every particle")->capture_default_str();
    oracle_cmd->add_option("--state", state, "Input state: random, gaussian, plane_wave")
        ->check(CLI::IsMember({"random", "gaussian", "plane_wave"}))
        ->capture_default_str();
    oracle_cmd->add_option("--seed", oracle.seed, "Seed for the random input state")->capture_default_str();

    qlps::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Measure frame throughput for a config");
    bench_cmd->add_option("--config", bench.config, "Config JSON")->required();
    bench_cmd->add_option("--frames", bench.frames, "Frames to time")->capture_default_str();

    qlps::ServeOptions serve;
    std::string serve_config;
    auto* serve_cmd = app.add_subcommand("serve", "Host sessions over WebSocket");
    serve_cmd->add_option("--config", serve_config, "Default session config JSON");
    serve_cmd->add_option("--bind", serve.address, "Bind address")->capture_default_str();
    serve_cmd->add_option("--port", serve.port, "TCP port")->capture_default_str();
    serve_cmd->add_option("--fps", serve.fps, "Frames per second")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qlps::kExitConfig;
    }

    try {
        if (*run_cmd) {
            run.config = config;
            if (!scenario.empty()) run.scenario = scenario;
            run.out_dir = out_dir;
            if (*seed_opt) run.seed = seed;
            if (!export_list.empty()) {
                qlps::ExportSpec spec;
                spec.formats = qlps::parse_formats(export_list);
                spec.out_dir = out_dir;
                spec.gamma = gamma;
                spec.every_k_frames = every;
                if (!(gamma > 0.0 && gamma <= 1.0)) throw qlps::ConfigError("gamma", "must lie in (0, 1]");
                run.exports = spec;
            }
            return qlps::cmd_run(run, std::cout, std::cerr);
        }
        if (*oracle_cmd) {
            const auto [m, n] = qlps::parse_grid(grid);
            oracle.m = m;
            oracle.n = n;
            oracle.dts = qlps::parse_dt_list(dts);
            oracle.state = state == "gaussian" ? qlps::OracleState::gaussian
                           : state == "plane_wave" ? qlps::OracleState::plane_wave
                                                   : qlps::OracleState::random;
            return qlps::cmd_oracle(oracle, std::cout, std::cerr);
        }
        if (*bench_cmd) return qlps::cmd_bench(bench, std::cout, std::cerr);
        if (*serve_cmd) {
            if (!serve_config.empty()) serve.config = serve_config;
            return qlps::cmd_serve(serve, std::cout, std::cerr);
        }
    } catch (const qlps::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return qlps::kExitConfig;
    }
    return qlps::kExitOk;
}
