#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "qlps/service/protocol.hpp"
#include "qlps/session/config.hpp"
#include "qlps/session/session.hpp"

namespace qlps {

struct Outgoing {
    std::string text;
    bool droppable = false;  // only frame messages may be dropped under backpressure
};

/// Per-connection protocol state machine, independent of the transport.
/// Incoming messages are queued and handled in arrival order at the next tick;
/// each tick then advances the session by one frame when it is running.
class Connection {
public:
    explicit Connection(SessionConfig default_config);

    void receive(std::string text);
    std::vector<Outgoing> tick();

    bool has_session() const noexcept { return session_.has_value(); }
    const Session& session() const { return *session_; }
    std::uint64_t frames_sent() const noexcept { return next_seq_; }

private:
    void handle(const std::string& text, std::vector<Outgoing>& out);
    void error(std::vector<Outgoing>& out, const std::string& code, const std::string& message);

    SessionConfig default_config_;
    std::optional<Session> session_;
    std::deque<std::string> inbox_;
    std::uint64_t next_seq_ = 0;
};

/// Write queue with the frame-dropping rule: queuing a frame discards any
/// frame still waiting behind it; other messages are always kept.
class OutboundQueue {
public:
    void push(Outgoing msg);
    bool empty() const noexcept { return queue_.empty(); }
    std::size_t size() const noexcept { return queue_.size(); }
    const Outgoing& front() const { return queue_.front(); }
    void pop() { queue_.pop_front(); }

    /// Marks the front as being written so it is never dropped.
    void lock_front() noexcept { front_locked_ = !queue_.empty(); }
    void unlock_front() noexcept { front_locked_ = false; }

    std::uint64_t dropped() const noexcept { return dropped_; }

private:
    std::deque<Outgoing> queue_;
    bool front_locked_ = false;
    std::uint64_t dropped_ = 0;
};

} // namespace qlps
