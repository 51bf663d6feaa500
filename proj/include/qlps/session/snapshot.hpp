#pragma once

// Binary snapshot layout (all integers little-endian):
//   "QLPS"                      4-byte magic
//   u32 version                 currently 1
//   u64 length + bytes          canonical JSON: {"config": ..., "state": ...}
//   u64 count                   number of amplitudes, must equal (m*n)^N
//   count * (f64 re, f64 im)    IEEE-754 binary64
//   u32 length + bytes          RNG state (text form of std::mt19937_64)

#include <cstdint>
#include <string>

#include "qlps/error.hpp"
#include "qlps/session/session.hpp"

namespace qlps {

inline constexpr std::uint32_t kSnapshotVersion = 1;

enum class SnapshotErrc { not_a_snapshot, version_mismatch, truncated, corrupt };

class SnapshotError : public Error {
public:
    SnapshotError(SnapshotErrc code, const std::string& message) : Error(message), code_(code) {}

    SnapshotErrc code() const noexcept { return code_; }

private:
    SnapshotErrc code_;
};

std::string save_snapshot(const Session& session);
Session load_snapshot(const std::string& bytes);

} // namespace qlps
