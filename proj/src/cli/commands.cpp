#include "qlps/cli/commands.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qlps/cli/render.hpp"
#include "qlps/initial_state.hpp"
#include "qlps/oracle.hpp"
#include "qlps/service/server.hpp"
#include "qlps/session/scenario.hpp"
#include "qlps/session/session.hpp"

namespace qlps {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
public:
    using Error::Error;
};

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream f(path, mode);
    if (!f) throw IoError("cannot write '" + path.string() + "'");
    return f;
}

} // namespace

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    SessionConfig config;
    std::vector<ScenarioEvent> events;
    try {
        config = load_config_file(opts.config);
        if (opts.seed) config.sim.seed = *opts.seed;
        if (opts.scenario) events = load_scenario_file(*opts.scenario);
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        const fs::path dir = opts.exports ? opts.exports->out_dir : opts.out_dir;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

        const std::size_t n = config.model.size();
        std::ofstream stats = open_output(dir / "stats.csv");
        write_stats_header(stats, n);
        std::optional<std::ofstream> measurements;

        std::vector<Channel> channels;
        for (const auto& p : config.model.particles) channels.push_back(p.display_channel);

        const FrameSink sink = [&](const FrameRecord& rec, const std::vector<Marginal2D>& marginals) {
            write_stats_row(stats, rec.frame, rec.stats);
            if (!rec.outcomes.empty()) {
                if (!measurements) {
                    measurements = open_output(dir / "measurements.csv");
                    write_measurements_header(*measurements, n);
                }
                for (const auto& o : rec.outcomes) write_measurement_row(*measurements, rec.frame, o);
            }
            if (!opts.exports || rec.frame % static_cast<std::uint64_t>(opts.exports->every_k_frames) != 0) return;
            if (opts.exports->formats.contains(ExportFormat::csv)) {
                auto f = open_output(dir / frame_file_name(rec.frame, "csv"));
                write_marginals_csv(f, marginals);
                if (!f) throw IoError("write failed for frame csv");
            }
            if (opts.exports->formats.contains(ExportFormat::ppm)) {
                auto f = open_output(dir / frame_file_name(rec.frame, "ppm"), std::ios::out | std::ios::binary);
                write_ppm(f, render_frame_image(marginals, channels, opts.exports->gamma));
                if (!f) throw IoError("write failed for frame ppm");
            }
        };

        Session session(config);
        const auto records = run_scenario(session, events, opts.frames, sink);
        stats.flush();
        if (!stats) throw IoError("write failed for stats.csv");
        out << "ran " << records.size() << " frames, t = " << format_double(session.time()) << ", output in "
            << dir.string() << '\n';
        return kExitOk;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const UnstableStep& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

std::vector<double> parse_dt_list(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "auto") {
            out.push_back(-1.0);
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || !(v >= 0.0)) throw ConfigError("dt", "bad time step '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    try {
        if (x != std::string::npos) {
            std::size_t a = 0, b = 0;
            const int m = std::stoi(text.substr(0, x), &a);
            const int n = std::stoi(text.substr(x + 1), &b);
            if (a == x && b == text.size() - x - 1) return {m, n};
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("grid", "expected MxN, got '" + text + "'");
}

OracleReport run_oracle(const OracleOptions& opts) {
    const GridSpec grid{opts.m, opts.n, 1.0, 1.0};
    grid.validate();
    ModelParams params;
    params.particles.assign(opts.particles, ParticleSpec{1.0, opts.spring_k, Channel::none});
    params.validate();
    const std::size_t size = state_size(grid, opts.particles);
    if (size > kOracleMaxSize) throw InvalidArgument("oracle scale exceeded");

    WaveFunction psi(grid, opts.particles);
    switch (opts.state) {
    case OracleState::random: {
        Rng rng(opts.seed);
        for (auto& a : psi.amplitudes()) a = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
        normalize(psi);
        break;
    }
    case OracleState::gaussian: {
        std::vector<GaussianSpec> specs;
        for (std::size_t i = 0; i < opts.particles; ++i)
            specs.push_back({{0.5 * (grid.m - 1), 0.5 * (grid.n - 1)}, 0.5 * std::min(grid.m, grid.n) / 2.0, {}});
        psi = gaussian_product_state(grid, params, specs);
        break;
    }
    case OracleState::plane_wave: {
        if (opts.particles != 1) throw InvalidArgument("plane-wave input needs exactly one particle");
        const double two_pi = 2.0 * std::acos(-1.0);
        for (int ax = 0; ax < grid.m; ++ax)
            for (int ay = 0; ay < grid.n; ++ay)
                psi.at({{ax, ay}}) = std::polar(1.0, two_pi * ax / grid.m);
        normalize(psi);
        break;
    }
    }

    const DenseOracle oracle(grid, params);
    Stepper stepper(Hamiltonian(grid, params));
    OracleReport report;
    report.state_size = size;
    for (double dt : opts.dts.empty() ? std::vector<double>{-1.0, -2.0} : opts.dts) {
        if (dt == -1.0) dt = choose_dt(grid, params, 0.1);
        else if (dt == -2.0) dt = 0.5 * choose_dt(grid, params, 0.1);
        OracleRow row;
        row.dt = dt;
        WaveFunction euler = psi;
        stepper.advance(euler, dt);
        row.single_step_error = l2_distance(euler, oracle.evolve(psi, dt));
        for (int s = 1; s < opts.long_steps; ++s) stepper.advance(euler, dt);
        row.multi_step_error = l2_distance(euler, oracle.evolve(psi, dt * opts.long_steps));
        if (!report.rows.empty() && row.single_step_error > 0.0)
            row.ratio = report.rows.back().single_step_error / row.single_step_error;
        report.rows.push_back(row);
    }
    return report;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
    OracleReport report;
    try {
        report = run_oracle(opts);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    out << "grid " << opts.m << "x" << opts.n << ", N=" << opts.particles << ", amplitudes=" << report.state_size << '\n';
    out << "dt,step_error," << opts.long_steps << "step_error,ratio\n";
    for (const auto& row : report.rows) {
        out << format_double(row.dt) << ',' << format_double(row.single_step_error) << ','
            << format_double(row.multi_step_error) << ',' << (row.ratio ? format_double(*row.ratio) : "") << '\n';
    }
    return kExitOk;
}

BenchReport run_bench(const SessionConfig& config, std::uint64_t frames, bool compare_reference) {
    Session session(config);
    BenchReport r;
    r.state_size = session.psi().size();
    r.threads = kernels::max_threads();

    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t f = 0; f < frames; ++f) session.advance_frame();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.steps = frames * static_cast<std::uint64_t>(session.steps_per_frame());
    r.steps_per_second = r.seconds > 0.0 ? r.steps / r.seconds : 0.0;
    r.stencil_points_per_second =
        r.steps_per_second * static_cast<double>(r.state_size) * (1.0 + 4.0 * static_cast<double>(config.model.size()));

    std::uint64_t h = 1469598103934665603ull;
    for (const Complex& a : session.psi().amplitudes()) {
        for (double part : {a.real(), a.imag()}) {
            const auto bits = std::bit_cast<std::uint64_t>(part);
            for (int b = 0; b < 8; ++b) {
                h ^= (bits >> (8 * b)) & 0xFF;
                h *= 1099511628211ull;
            }
        }
    }
    r.checksum = h;

    if (compare_reference) {
        const Hamiltonian ham(config.grid, config.model);
        std::vector<Complex> out(ham.size());
        const auto psi = session.psi().amplitudes();
        const auto t0 = std::chrono::steady_clock::now();
        kernels::reference::apply_hamiltonian(ham.plan(), psi, out);
        const auto t1 = std::chrono::steady_clock::now();
        ham.apply(psi, out);
        const auto t2 = std::chrono::steady_clock::now();
        const double ref = std::chrono::duration<double>(t1 - t0).count();
        const double fast = std::chrono::duration<double>(t2 - t1).count();
        if (fast > 0.0) r.reference_speedup = ref / fast;
    }
    return r;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    SessionConfig config;
    try {
        config = load_config_file(opts.config);
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    BenchReport r;
    try {
        r = run_bench(config, opts.frames, opts.compare_reference);
    } catch (const Error& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
    out << "amplitudes: " << r.state_size << '\n'
        << "threads: " << r.threads << '\n'
        << "steps: " << r.steps << " in " << format_double(r.seconds) << " s\n"
        << "steps_per_second: " << format_double(r.steps_per_second) << '\n'
        << "stencil_points_per_second: " << format_double(r.stencil_points_per_second) << '\n';
    if (r.reference_speedup) out << "speedup_vs_reference: " << format_double(*r.reference_speedup) << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r.checksum));
    out << "checksum: " << buf << '\n';
    return kExitOk;
}

SessionConfig demo_config() {
    SessionConfig c;
    c.grid = {8, 8, 1.0, 1.0};
    c.model.particles = {{1.0, 0.1, Channel::red}, {1.0, 0.1, Channel::green}, {1.0, 0.1, Channel::blue}};
    c.sim.steps_per_frame = 4;
    c.sim.seed = 1;
    c.initial.assign(3, GaussianSpec{{3.5, 3.5}, 1.0, {}});
    return c;
}

int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err) {
    ServerOptions so;
    so.address = opts.address;
    so.port = opts.port;
    so.fps = opts.fps;
    try {
        so.default_config = opts.config ? load_config_file(*opts.config) : demo_config();
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    try {
        Server server(std::move(so));
        out << "listening on ws://" << opts.address << ':' << server.port() << '\n' << std::flush;
        server.run();
    } catch (const Error& e) {
        err << "server error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace qlps
