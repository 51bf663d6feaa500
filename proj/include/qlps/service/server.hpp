#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "qlps/session/config.hpp"

namespace qlps {

struct ServerOptions {
    std::string address = "127.0.0.1";
    unsigned short port = 8765;  // 0 picks a free port
    double fps = 20.0;
    SessionConfig default_config;
};

/// WebSocket server: one Connection (and so one Session) per client, paced by
/// a per-connection timer at `fps`. Runs on a single I/O thread.
class Server {
public:
    /// Binds immediately; throws Error when the address cannot be bound.
    explicit Server(ServerOptions options);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    unsigned short port() const noexcept;

    /// Blocks until stop() is called.
    void run();
    /// Safe to call from any thread.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace qlps
