#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qlps/cli/commands.hpp"
#include "qlps/cli/render.hpp"
#include "qlps/stepper.hpp"

using namespace qlps;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kTwoParticles = R"({
  "grid": {"m": 4, "n": 4},
  "model": {"particles": [{"spring_k": 1}, {"spring_k": 1}]},
  "sim": {"seed": 3, "steps_per_frame": 2},
  "initial": [{"center": [1, 1], "width": 1}, {"center": [2, 2], "width": 1}]
})";

// Width 0.05 puts all but ~1e-44 of the weight on cell (2,1).
const char* kNarrowOne = R"({
  "grid": {"m": 4, "n": 3},
  "model": {"particles": [{"spring_k": 0}]},
  "initial": [{"center": [2, 1], "width": 0.05}]
})";

} // namespace

TEST_CASE("run writes stats and per-frame csv") {
    TempDir dir("qlps_run_csv");
    write_file(dir.path / "cfg.json", kTwoParticles);
    RunOptions opts;
    opts.config = dir.path / "cfg.json";
    opts.frames = 10;
    opts.exports = ExportSpec{{ExportFormat::csv}, dir.path / "out", 0.5, 1};
    std::ostringstream out, err;
    REQUIRE(cmd_run(opts, out, err) == kExitOk);
    const std::string stats = slurp(dir.path / "out" / "stats.csv");
    CHECK(count_lines(stats) == 11);
    CHECK(stats.rfind("frame,t,pre_norm,total_energy,kin_0,kin_1,ex_0,ey_0,ex_1,ey_1,cm_x,cm_y\n", 0) == 0);
    for (std::uint64_t f = 0; f < 10; ++f) {
        const auto csv = slurp(dir.path / "out" / frame_file_name(f, "csv"));
        CHECK(count_lines(csv) == 17);
    }
    CHECK_FALSE(fs::exists(dir.path / "out" / "measurements.csv"));
}

TEST_CASE("every-k export, clicks and seed override") {
    TempDir dir("qlps_run_every");
    write_file(dir.path / "cfg.json", kTwoParticles);
    write_file(dir.path / "events.json", R"([{"frame": 2, "action": "click", "ax": 1, "ay": 1}])");
    RunOptions opts;
    opts.config = dir.path / "cfg.json";
    opts.scenario = dir.path / "events.json";
    opts.frames = 7;
    opts.exports = ExportSpec{{ExportFormat::csv, ExportFormat::ppm}, dir.path / "out", 0.5, 3};
    std::ostringstream out, err;
    REQUIRE(cmd_run(opts, out, err) == kExitOk);
    for (std::uint64_t f = 0; f < 7; ++f) {
        CHECK(fs::exists(dir.path / "out" / frame_file_name(f, "csv")) == (f % 3 == 0));
        CHECK(fs::exists(dir.path / "out" / frame_file_name(f, "ppm")) == (f % 3 == 0));
    }
    const auto m = slurp(dir.path / "out" / "measurements.csv");
    CHECK(count_lines(m) == 2);
    CHECK(m.find("\n2,1,1,") != std::string::npos);

    const auto first = slurp(dir.path / "out" / "stats.csv");
    opts.seed = 999;
    REQUIRE(cmd_run(opts, out, err) == kExitOk);
    CHECK(slurp(dir.path / "out" / "stats.csv").substr(0, 200) == first.substr(0, 200));
}

TEST_CASE("exports are byte-deterministic") {
    TempDir dir("qlps_run_det");
    write_file(dir.path / "cfg.json", kTwoParticles);
    write_file(dir.path / "events.json", R"([{"frame": 1, "action": "click", "ax": 2, "ay": 2},
                                            {"frame": 3, "action": "click", "ax": 1, "ay": 1}])");
    auto run = [&](const std::string& sub) {
        RunOptions opts;
        opts.config = dir.path / "cfg.json";
        opts.scenario = dir.path / "events.json";
        opts.frames = 6;
        opts.exports = ExportSpec{{ExportFormat::csv, ExportFormat::ppm}, dir.path / sub, 0.5, 1};
        std::ostringstream out, err;
        REQUIRE(cmd_run(opts, out, err) == kExitOk);
    };
    run("a");
    run("b");
    for (const auto& entry : fs::directory_iterator(dir.path / "a"))
        CHECK(slurp(entry.path()) == slurp(dir.path / "b" / entry.path().filename()));
}

TEST_CASE("ppm of a delta-like frame has exactly one lit pixel and matches the csv") {
    TempDir dir("qlps_run_delta");
    write_file(dir.path / "cfg.json", kNarrowOne);
    write_file(dir.path / "events.json", R"([{"frame": 0, "action": "pause"}])");
    RunOptions opts;
    opts.config = dir.path / "cfg.json";
    opts.scenario = dir.path / "events.json";
    opts.frames = 1;
    opts.exports = ExportSpec{{ExportFormat::csv, ExportFormat::ppm}, dir.path / "out", 0.5, 1};
    std::ostringstream out, err;
    REQUIRE(cmd_run(opts, out, err) == kExitOk);

    const std::string ppm = slurp(dir.path / "out" / frame_file_name(0, "ppm"));
    const std::string header = "P6\n4 3\n255\n";
    REQUIRE(ppm.size() == header.size() + 36);
    int lit = 0;
    for (std::size_t px = 0; px < 12; ++px) {
        const auto* p = reinterpret_cast<const unsigned char*>(ppm.data() + header.size() + 3 * px);
        if (p[0] || p[1] || p[2]) {
            ++lit;
            CHECK(px == 1 * 4 + 2);
            CHECK(p[0] == 255);
        }
    }
    CHECK(lit == 1);

    // Requantize the lossless csv and compare with the image bytes.
    std::istringstream csv(slurp(dir.path / "out" / frame_file_name(0, "csv")));
    std::string line;
    std::getline(csv, line);
    std::vector<double> p;
    while (std::getline(csv, line)) p.push_back(std::stod(line.substr(line.rfind(',') + 1)));
    REQUIRE(p.size() == 12);
    const double max = *std::max_element(p.begin(), p.end());
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(static_cast<unsigned char>(ppm[header.size() + 3 * i]) == channel_level(p[i], max, 0.5));
}

TEST_CASE("run exit codes") {
    TempDir dir("qlps_run_codes");
    std::ostringstream out, err;
    RunOptions opts;
    opts.config = dir.path / "missing.json";
    CHECK(cmd_run(opts, out, err) == kExitConfig);
    CHECK_FALSE(err.str().empty());

    write_file(dir.path / "bad.json", R"({"grid": {"m": 1, "n": 4}, "model": {"particles": [{}]}, "initial": [{"center": [0,0], "width": 1}]})");
    opts.config = dir.path / "bad.json";
    CHECK(cmd_run(opts, out, err) == kExitConfig);

    write_file(dir.path / "cfg.json", kTwoParticles);
    opts.config = dir.path / "cfg.json";
    write_file(dir.path / "events.json", R"([{"frame": 0, "action": "explode"}])");
    opts.scenario = dir.path / "events.json";
    CHECK(cmd_run(opts, out, err) == kExitConfig);

    opts.scenario.reset();
    write_file(dir.path / "blocker", "x");
    opts.out_dir = dir.path / "blocker" / "sub";
    opts.frames = 1;
    CHECK(cmd_run(opts, out, err) == kExitIo);

    write_file(dir.path / "unstable.json", R"({"grid": {"m": 3, "n": 3}, "model": {"particles": [{}]},
        "sim": {"dt": 1e308}, "initial": [{"center": [1,1], "width": 1}]})");
    opts.config = dir.path / "unstable.json";
    opts.out_dir = dir.path / "out";
    CHECK(cmd_run(opts, out, err) == kExitRuntime);
}

TEST_CASE("argument parsers") {
    CHECK(parse_grid("3x4") == std::pair{3, 4});
    CHECK(parse_grid("10X2") == std::pair{10, 2});
    CHECK_THROWS_AS(parse_grid("3x"), ConfigError);
    CHECK_THROWS_AS(parse_grid("3by3"), ConfigError);
    CHECK(parse_dt_list("0.01,0.005") == std::vector<double>{0.01, 0.005});
    CHECK(parse_dt_list("auto") == std::vector<double>{-1.0});
    CHECK_THROWS_AS(parse_dt_list("0.1,fast"), ConfigError);
    CHECK_THROWS_AS(parse_dt_list("-0.1"), ConfigError);
}

TEST_CASE("oracle report") {
    OracleOptions o;
    const auto report = run_oracle(o);
    CHECK(report.state_size == 81);
    REQUIRE(report.rows.size() == 2);
    REQUIRE(report.rows[1].ratio.has_value());
    CHECK(*report.rows[1].ratio >= 2.5);
    CHECK(*report.rows[1].ratio <= 6.0);
    CHECK(report.rows[0].single_step_error <= 1e-3);

    o.dts = {0.0};
    CHECK(run_oracle(o).rows[0].single_step_error == 0.0);
    CHECK(run_oracle(o).rows[0].multi_step_error == 0.0);

    std::ostringstream out, err;
    o.m = 9;
    o.n = 8;
    CHECK(cmd_oracle(o, out, err) == kExitRuntime);
    CHECK(err.str().find("oracle scale exceeded") != std::string::npos);
}

TEST_CASE("plane-wave oracle error matches the closed form") {
    OracleOptions o;
    o.m = 5;
    o.n = 4;
    o.particles = 1;
    o.spring_k = 0.0;
    o.state = OracleState::plane_wave;
    o.dts = {0.05, 0.02};
    o.long_steps = 1;
    const double pi = std::acos(-1.0);
    const double e = 0.5 * (2.0 - 2.0 * std::cos(2.0 * pi / 5.0));
    for (const auto& row : run_oracle(o).rows) {
        const Complex euler = Complex(1.0, -e * row.dt) / std::sqrt(1.0 + e * e * row.dt * row.dt);
        const double expected = std::abs(euler - std::polar(1.0, -e * row.dt));
        CHECK(std::abs(row.single_step_error - expected) <= 1e-12);
    }
}

TEST_CASE("bench reports a deterministic workload") {
    SessionConfig cfg;
    cfg.grid = {4, 4, 1.0, 1.0};
    cfg.model.particles.assign(2, ParticleSpec{1.0, 1.0, Channel::none});
    cfg.initial.assign(2, GaussianSpec{{1.5, 1.5}, 1.0, {}});
    cfg.sim.steps_per_frame = 3;
    const auto a = run_bench(cfg, 4, true);
    const auto b = run_bench(cfg, 4, false);
    CHECK(a.state_size == 256);
    CHECK(a.steps == 12);
    CHECK(a.checksum == b.checksum);
    CHECK(a.steps_per_second > 0.0);
    CHECK(a.stencil_points_per_second == doctest::Approx(a.steps_per_second * 256 * 9));
    CHECK(a.reference_speedup.has_value());
    CHECK_FALSE(b.reference_speedup.has_value());

    cfg.model.particles.push_back({1.0, 1.0, Channel::none});
    cfg.initial.push_back({{2.0, 2.0}, 1.0, {}});
    CHECK(run_bench(cfg, 1, false).state_size == a.state_size * 16);
}

TEST_CASE("demo config is valid") {
    const auto c = demo_config();
    CHECK_NOTHROW(c.validate());
    CHECK(c.model.size() == 3);
}
