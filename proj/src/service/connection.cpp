#include "qlps/service/connection.hpp"

#include <algorithm>

namespace qlps {

Connection::Connection(SessionConfig default_config) : default_config_(std::move(default_config)) {}

void Connection::receive(std::string text) { inbox_.push_back(std::move(text)); }

void Connection::error(std::vector<Outgoing>& out, const std::string& code, const std::string& message) {
    out.push_back({wire::encode(wire::ErrorMsg{code, message}), false});
}

void Connection::handle(const std::string& text, std::vector<Outgoing>& out) {
    wire::Message msg;
    try {
        msg = wire::decode(text);
    } catch (const wire::ProtocolError& e) {
        error(out, e.code(), e.what());
        return;
    }

    if (const auto* init = std::get_if<wire::Init>(&msg)) {
        try {
            SessionConfig cfg = init->config ? config_from_json(*init->config) : default_config_;
            session_.emplace(std::move(cfg));
        } catch (const ConfigError& e) {
            error(out, "bad_config", e.what());
            return;
        }
        out.push_back({wire::encode(wire::make_ready(*session_)), false});
        return;
    }

    const bool client_type = std::holds_alternative<wire::Click>(msg) || std::holds_alternative<wire::Pause>(msg) ||
                             std::holds_alternative<wire::Resume>(msg) || std::holds_alternative<wire::Reset>(msg) ||
                             std::holds_alternative<wire::SetSpeed>(msg);
    if (!client_type) {
        error(out, "unexpected_type", "clients may not send '" + wire::type_name(msg) + "'");
        return;
    }
    if (!session_) {
        error(out, "no_session", "send init first");
        return;
    }

    if (const auto* click = std::get_if<wire::Click>(&msg)) {
        const Cell cell{click->ax, click->ay};
        if (!in_bounds(cell, session_->grid())) {
            error(out, "bad_cell", "cell outside grid");
            return;
        }
        out.push_back({wire::encode(wire::Measurement{session_->handle_click(cell)}), false});
    } else if (std::holds_alternative<wire::Pause>(msg)) {
        session_->pause();
    } else if (std::holds_alternative<wire::Resume>(msg)) {
        session_->resume();
    } else if (std::holds_alternative<wire::Reset>(msg)) {
        session_->reset();
        out.push_back({wire::encode(wire::make_ready(*session_)), false});
    } else if (const auto* speed = std::get_if<wire::SetSpeed>(&msg)) {
        if (speed->steps_per_frame < 1) {
            error(out, "bad_message", "steps_per_frame must be >= 1");
            return;
        }
        session_->set_steps_per_frame(speed->steps_per_frame);
    }
}

std::vector<Outgoing> Connection::tick() {
    std::vector<Outgoing> out;
    while (!inbox_.empty()) {
        const std::string text = std::move(inbox_.front());
        inbox_.pop_front();
        handle(text, out);
    }
    if (session_ && session_->status() == SessionStatus::running) {
        try {
            const FrameResult r = session_->advance_frame();
            out.push_back({wire::encode(wire::encode_frame(next_seq_++, r.stats, r.marginals)), true});
        } catch (const UnstableStep& e) {
            error(out, "unstable", e.what());
        }
    }
    return out;
}

void OutboundQueue::push(Outgoing msg) {
    if (msg.droppable) {
        const auto first = queue_.begin() + (front_locked_ ? 1 : 0);
        const auto before = queue_.size();
        queue_.erase(std::remove_if(first, queue_.end(), [](const Outgoing& o) { return o.droppable; }), queue_.end());
        dropped_ += before - queue_.size();
    }
    queue_.push_back(std::move(msg));
}

} // namespace qlps
