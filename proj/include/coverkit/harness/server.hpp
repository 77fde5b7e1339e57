#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coverkit/harness/session.hpp"

namespace coverkit {

/// One client of the line protocol. Input lines use the scenario grammar;
/// replies are whole messages, each ending in LF:
///   - after a state-changing command or `dump`: a scene block, followed by
///     a covers block while `covers on` is active;
///   - after `sense`: `cursor HINT`;
///   - on any error: `err <line> <message>` (the session continues).
class ServeSession {
public:
    std::vector<std::string> handle_line(std::string_view line);
    const Session& session() const { return session_; }

private:
    Session session_;
    std::size_t line_no_ = 0;
};

/// Serves one session over a byte stream until end of input.
void serve_stream(std::istream& in, std::ostream& out);

/// Accepts TCP clients on 127.0.0.1:`port`, one session and thread per
/// connection. A client opening with an HTTP WebSocket upgrade gets the same
/// protocol with one text frame per message. Returns when `stop` becomes true
/// (checked between accepts) or on a socket error (returns non-zero).
/// `bound_port` receives the actual port, useful with port 0.
int serve_tcp(std::uint16_t port, const std::atomic<bool>& stop, std::atomic<std::uint16_t>* bound_port = nullptr);

/// Sec-WebSocket-Accept value for a client key.
std::string websocket_accept_key(std::string_view client_key);

}  // namespace coverkit
