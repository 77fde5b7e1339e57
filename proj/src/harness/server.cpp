#include "coverkit/harness/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <openssl/evp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "coverkit/harness/dump.hpp"

namespace coverkit {

std::vector<std::string> ServeSession::handle_line(std::string_view line) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> out;
    try {
        const auto command = parse_command(line);
        if (!command) return out;
        const ExecResult r = session_.execute(*command);
        if (r.cursor) {
            out.push_back(std::string("cursor ") + to_string(*r.cursor) + "\n");
        } else if (is_state_changing(*command) || r.dump) {
            out.push_back(scene_block(session_.scene()));
            if (session_.covers_enabled()) out.push_back(covers_block(session_.scene()));
        }
    } catch (const Error& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        out.push_back("err " + std::to_string(line_no_) + " " + msg + "\n");
    }
    return out;
}

void serve_stream(std::istream& in, std::ostream& out) {
    ServeSession session;
    std::string line;
    while (std::getline(in, line)) {
        for (const std::string& msg : session.handle_line(line)) out << msg;
        out.flush();
    }
}

std::string websocket_accept_key(std::string_view client_key) {
    static constexpr std::string_view kGuid = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11";
    const std::string joined = std::string(client_key) + std::string(kGuid);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    EVP_Digest(joined.data(), joined.size(), digest, &digest_len, EVP_sha1(), nullptr);
    unsigned char encoded[4 * ((EVP_MAX_MD_SIZE + 2) / 3) + 1];
    const int n = EVP_EncodeBlock(encoded, digest, static_cast<int>(digest_len));
    return std::string(reinterpret_cast<const char*>(encoded), static_cast<std::size_t>(n));
}

namespace {

bool send_all(int fd, std::string_view data) {
    while (!data.empty()) {
        const ssize_t n = ::send(fd, data.data(), data.size(), MSG_NOSIGNAL);
        if (n <= 0) return false;
        data.remove_prefix(static_cast<std::size_t>(n));
    }
    return true;
}

/// Buffered reader over a connected socket.
class SocketReader {
public:
    explicit SocketReader(int fd) : fd_(fd) {}

    bool fill() {
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n <= 0) return false;
        buf_.append(chunk, static_cast<std::size_t>(n));
        return true;
    }

    std::optional<std::string> line() {
        for (;;) {
            const std::size_t nl = buf_.find('\n');
            if (nl != std::string::npos) {
                std::string out = buf_.substr(0, nl);
                buf_.erase(0, nl + 1);
                return out;
            }
            if (!fill()) return std::nullopt;
        }
    }

    std::optional<std::string> bytes(std::size_t count) {
        while (buf_.size() < count) {
            if (!fill()) return std::nullopt;
        }
        std::string out = buf_.substr(0, count);
        buf_.erase(0, count);
        return out;
    }

    const std::string& peek_buffer() const { return buf_; }

private:
    int fd_;
    std::string buf_;
};

std::string ws_frame(unsigned char opcode, std::string_view payload) {
    std::string f;
    f.push_back(static_cast<char>(0x80 | opcode));
    const std::size_t n = payload.size();
    if (n < 126) {
        f.push_back(static_cast<char>(n));
    } else if (n <= 0xFFFF) {
        f.push_back(static_cast<char>(126));
        f.push_back(static_cast<char>((n >> 8) & 0xFF));
        f.push_back(static_cast<char>(n & 0xFF));
    } else {
        f.push_back(static_cast<char>(127));
        for (int shift = 56; shift >= 0; shift -= 8) f.push_back(static_cast<char>((n >> shift) & 0xFF));
    }
    f.append(payload);
    return f;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

void serve_websocket(int fd, SocketReader& reader) {
    std::string key;
    for (;;) {
        auto header = reader.line();
        if (!header) return;
        const std::string h = trim(*header);
        if (h.empty()) break;
        const std::size_t colon = h.find(':');
        if (colon != std::string::npos && lower(h.substr(0, colon)) == "sec-websocket-key") {
            key = trim(std::string_view(h).substr(colon + 1));
        }
    }
    if (key.empty()) {
        send_all(fd, "HTTP/1.1 400 Bad Request\r\nContent-Length: 0\r\n\r\n");
        return;
    }
    if (!send_all(fd, "HTTP/1.1 101 Switching Protocols\r\nUpgrade: websocket\r\nConnection: Upgrade\r\n"
                      "Sec-WebSocket-Accept: " + websocket_accept_key(key) + "\r\n\r\n")) {
        return;
    }

    ServeSession session;
    std::string message;
    for (;;) {
        const auto head = reader.bytes(2);
        if (!head) return;
        const auto b0 = static_cast<unsigned char>((*head)[0]);
        const auto b1 = static_cast<unsigned char>((*head)[1]);
        const bool fin = (b0 & 0x80) != 0;
        const unsigned char opcode = b0 & 0x0F;
        std::uint64_t len = b1 & 0x7F;
        if (len >= 126) {
            const auto ext = reader.bytes(len == 126 ? 2 : 8);
            if (!ext) return;
            len = 0;
            for (const char c : *ext) len = (len << 8) | static_cast<unsigned char>(c);
        }
        std::string mask(4, '\0');
        if (b1 & 0x80) {
            const auto m = reader.bytes(4);
            if (!m) return;
            mask = *m;
        }
        if (len > (1u << 24)) return;  // refuse absurd frames
        auto payload = reader.bytes(static_cast<std::size_t>(len));
        if (!payload) return;
        for (std::size_t i = 0; i < payload->size(); ++i) (*payload)[i] = static_cast<char>((*payload)[i] ^ mask[i % 4]);

        switch (opcode) {
            case 0x8:
                send_all(fd, ws_frame(0x8, {}));
                return;
            case 0x9:
                if (!send_all(fd, ws_frame(0xA, *payload))) return;
                continue;
            case 0xA:
                continue;
            case 0x0:
            case 0x1:
                message += *payload;
                break;
            default:
                continue;
        }
        if (!fin) continue;
        std::size_t start = 0;
        while (start <= message.size()) {
            const std::size_t nl = message.find('\n', start);
            const std::string_view line = std::string_view(message).substr(start, nl == std::string::npos ? std::string::npos : nl - start);
            for (const std::string& msg : session.handle_line(line)) {
                if (!send_all(fd, ws_frame(0x1, msg))) return;
            }
            if (nl == std::string::npos) break;
            start = nl + 1;
        }
        message.clear();
    }
}

void serve_connection(int fd) {
    SocketReader reader(fd);
    // Four bytes tell "GET " apart; a complete short line is plain protocol.
    while (reader.peek_buffer().size() < 4 && reader.peek_buffer().find('\n') == std::string::npos) {
        if (!reader.fill()) return;
    }
    if (reader.peek_buffer().rfind("GET ", 0) == 0) {
        auto request_line = reader.line();
        if (request_line) serve_websocket(fd, reader);
        return;
    }
    ServeSession session;
    while (auto line = reader.line()) {
        for (const std::string& msg : session.handle_line(*line)) {
            if (!send_all(fd, msg)) return;
        }
    }
}

}  // namespace

int serve_tcp(std::uint16_t port, const std::atomic<bool>& stop, std::atomic<std::uint16_t>* bound_port) {
    const int listener = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listener < 0) return 1;
    const int yes = 1;
    ::setsockopt(listener, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(listener, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listener, 16) != 0) {
        ::close(listener);
        return 1;
    }
    socklen_t len = sizeof addr;
    ::getsockname(listener, reinterpret_cast<sockaddr*>(&addr), &len);
    if (bound_port) bound_port->store(ntohs(addr.sin_port));

    std::mutex mu;
    std::vector<int> clients;
    std::vector<std::thread> workers;
    int rc = 0;
    while (!stop.load()) {
        pollfd p{listener, POLLIN, 0};
        const int ready = ::poll(&p, 1, 100);
        if (ready < 0) {
            rc = 1;
            break;
        }
        if (ready == 0) continue;
        const int fd = ::accept(listener, nullptr, nullptr);
        if (fd < 0) continue;
        {
            std::lock_guard lock(mu);
            clients.push_back(fd);
        }
        workers.emplace_back([fd, &mu, &clients] {
            serve_connection(fd);
            std::lock_guard lock(mu);
            clients.erase(std::remove(clients.begin(), clients.end(), fd), clients.end());
            ::close(fd);
        });
    }
    {
        std::lock_guard lock(mu);
        for (const int fd : clients) ::shutdown(fd, SHUT_RDWR);
    }
    for (std::thread& t : workers) t.join();
    ::close(listener);
    return rc;
}

}  // namespace coverkit
