#include "qlps/session/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include <nlohmann/json.hpp>

namespace qlps {

namespace {

constexpr char kMagic[4] = {'Q', 'L', 'P', 'S'};

template <typename T>
void put_le(std::string& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
}

void put_f64(std::string& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
public:
    explicit Reader(const std::string& bytes) : data_(bytes) {}

    void need(std::size_t n) const {
        if (data_.size() - pos_ < n) throw SnapshotError(SnapshotErrc::truncated, "truncated snapshot");
    }

    template <typename T>
    T get_le() {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
        pos_ += sizeof(T);
        return v;
    }

    double get_f64() { return std::bit_cast<double>(get_le<std::uint64_t>()); }

    std::string get_bytes(std::uint64_t n) {
        need(static_cast<std::size_t>(n));
        std::string s = data_.substr(pos_, static_cast<std::size_t>(n));
        pos_ += static_cast<std::size_t>(n);
        return s;
    }

    std::size_t remaining() const { return data_.size() - pos_; }

private:
    const std::string& data_;
    std::size_t pos_ = 0;
};

const char* status_name(SessionStatus s) { return s == SessionStatus::running ? "running" : "paused"; }

} // namespace

std::string save_snapshot(const Session& session) {
    nlohmann::json state = {{"dt", session.dt()},
                            {"steps_per_frame", session.steps_per_frame()},
                            {"t", session.time()},
                            {"frame_no", session.frame_no()},
                            {"status", status_name(session.status())},
                            {"pre_norm", session.last_pre_norm()}};
    const nlohmann::json blob = {{"config", config_to_json(session.config())}, {"state", state}};
    const std::string text = blob.dump();

    std::string out(kMagic, sizeof(kMagic));
    put_le<std::uint32_t>(out, kSnapshotVersion);
    put_le<std::uint64_t>(out, text.size());
    out += text;
    const auto amps = session.psi().amplitudes();
    put_le<std::uint64_t>(out, amps.size());
    for (const Complex& a : amps) {
        put_f64(out, a.real());
        put_f64(out, a.imag());
    }
    const std::string rng = session.rng().serialize();
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(rng.size()));
    out += rng;
    return out;
}

Session load_snapshot(const std::string& bytes) {
    if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
        throw SnapshotError(SnapshotErrc::not_a_snapshot, "not a snapshot");
    Reader in(bytes);
    in.get_bytes(sizeof(kMagic));
    const auto version = in.get_le<std::uint32_t>();
    if (version != kSnapshotVersion)
        throw SnapshotError(SnapshotErrc::version_mismatch, "unsupported snapshot version " + std::to_string(version));

    const auto text = in.get_bytes(in.get_le<std::uint64_t>());
    const auto count = in.get_le<std::uint64_t>();
    // Checked before reading so a garbage count fails fast instead of allocating.
    in.need(static_cast<std::size_t>(std::min<std::uint64_t>(count, in.remaining() + 1) * 16));
    std::vector<Complex> amps(static_cast<std::size_t>(count));
    for (auto& a : amps) {
        const double re = in.get_f64();
        const double im = in.get_f64();
        a = Complex{re, im};
    }
    const auto rng_text = in.get_bytes(in.get_le<std::uint32_t>());
    if (in.remaining() != 0) throw SnapshotError(SnapshotErrc::corrupt, "corrupt snapshot: trailing bytes");

    try {
        const auto blob = nlohmann::json::parse(text);
        SessionConfig config = config_from_json(blob.at("config"));
        const auto& st = blob.at("state");
        const std::string status = st.at("status").get<std::string>();
        if (status != "running" && status != "paused") throw InvalidArgument("bad status");
        Session::RestoreState rs{st.at("dt").get<double>(),
                                 st.at("steps_per_frame").get<int>(),
                                 st.at("t").get<double>(),
                                 st.at("frame_no").get<std::uint64_t>(),
                                 status == "running" ? SessionStatus::running : SessionStatus::paused,
                                 st.at("pre_norm").get<double>(),
                                 Rng::deserialize(rng_text),
                                 WaveFunction(config.grid, config.model.size(), std::move(amps))};
        return Session::restore(std::move(config), std::move(rs));
    } catch (const SnapshotError&) {
        throw;
    } catch (const std::exception& e) {
        throw SnapshotError(SnapshotErrc::corrupt, std::string("corrupt snapshot: ") + e.what());
    }
}

} // namespace qlps
