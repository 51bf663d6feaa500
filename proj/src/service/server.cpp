#include "qlps/service/server.hpp"

#include <chrono>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "qlps/service/connection.hpp"

namespace qlps {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

class WsSession : public std::enable_shared_from_this<WsSession> {
public:
    WsSession(tcp::socket socket, const ServerOptions& options)
        : ws_(std::move(socket)),
          timer_(ws_.get_executor()),
          period_(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
              std::chrono::duration<double>(1.0 / options.fps))),
          logic_(options.default_config) {}

    void start() {
        ws_.text(true);
        ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
            if (ec) return;
            self->read();
            self->schedule();
        });
    }

private:
    void read() {
        ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) {
                self->closed_ = true;
                self->timer_.cancel();
                return;
            }
            self->logic_.receive(beast::buffers_to_string(self->buffer_.data()));
            self->buffer_.consume(self->buffer_.size());
            self->read();
        });
    }

    void schedule() {
        timer_.expires_after(period_);
        timer_.async_wait([self = shared_from_this()](beast::error_code ec) {
            if (ec || self->closed_) return;
            for (auto& msg : self->logic_.tick()) self->outbox_.push(std::move(msg));
            self->flush();
            self->schedule();
        });
    }

    void flush() {
        if (writing_ || outbox_.empty() || closed_) return;
        writing_ = true;
        outbox_.lock_front();
        ws_.async_write(asio::buffer(outbox_.front().text), [self = shared_from_this()](beast::error_code ec, std::size_t) {
            self->writing_ = false;
            self->outbox_.pop();
            self->outbox_.unlock_front();
            if (ec) {
                self->closed_ = true;
                self->timer_.cancel();
                return;
            }
            self->flush();
        });
    }

    websocket::stream<beast::tcp_stream> ws_;
    asio::steady_timer timer_;
    std::chrono::steady_clock::duration period_;
    beast::flat_buffer buffer_;
    Connection logic_;
    OutboundQueue outbox_;
    bool writing_ = false;
    bool closed_ = false;
};

} // namespace

struct Server::Impl {
    explicit Impl(ServerOptions opts) : options(std::move(opts)), acceptor(ioc) {}

    void accept() {
        acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
            if (!acceptor.is_open()) return;
            if (!ec) std::make_shared<WsSession>(std::move(socket), options)->start();
            accept();
        });
    }

    ServerOptions options;
    asio::io_context ioc;
    tcp::acceptor acceptor;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {
    if (!(impl_->options.fps > 0.0)) throw Error("fps must be positive");
    impl_->options.default_config.validate();
    beast::error_code ec;
    const auto address = asio::ip::make_address(impl_->options.address, ec);
    if (ec) throw Error("bad bind address '" + impl_->options.address + "': " + ec.message());
    const tcp::endpoint endpoint(address, impl_->options.port);
    auto& acc = impl_->acceptor;
    acc.open(endpoint.protocol(), ec);
    if (!ec) acc.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) acc.bind(endpoint, ec);
    if (!ec) acc.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) throw Error("cannot bind " + impl_->options.address + ":" + std::to_string(impl_->options.port) + ": " + ec.message());
}

Server::~Server() = default;

unsigned short Server::port() const noexcept {
    beast::error_code ec;
    const auto ep = impl_->acceptor.local_endpoint(ec);
    return ec ? 0 : ep.port();
}

void Server::run() {
    impl_->accept();
    impl_->ioc.run();
}

void Server::stop() {
    asio::post(impl_->ioc, [this] {
        beast::error_code ec;
        impl_->acceptor.close(ec);
        impl_->ioc.stop();
    });
}

} // namespace qlps
