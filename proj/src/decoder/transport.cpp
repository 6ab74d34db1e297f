//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/decoder/transport.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/un.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

extern char **environ;

namespace mgb {
namespace {

using Clock = std::chrono::steady_clock;
using protocol::ProtocolError;

std::string errno_text(const char *what) {
  return std::string(what) + ": " + std::strerror(errno);
}

void set_nonblocking(int fd) {
  const int flags = fcntl(fd, F_GETFL);
  if (flags < 0 || fcntl(fd, F_SETFL, flags | O_NONBLOCK) < 0)
    throw DecoderTransportError(errno_text("fcntl"));
}

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

// Blocking write of the whole buffer.
void write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR)
        continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) {
        pollfd p{fd, POLLOUT, 0};
        ::poll(&p, 1, -1);
        continue;
      }
      throw DecoderTransportError(errno_text("write"));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

PeerConnection::PeerConnection(int read_fd, int write_fd, bool is_socket, int child_pid)
    : read_fd_(read_fd), write_fd_(write_fd), is_socket_(is_socket), child_pid_(child_pid) {}

PeerConnection::~PeerConnection() {
  if (write_fd_ != read_fd_)
    ::close(write_fd_);
  ::close(read_fd_);
  if (child_pid_ > 0) {
    // Closing stdin asks the peer to exit; give it a moment before forcing.
    for (int i = 0; i < 200; ++i) {
      if (::waitpid(child_pid_, nullptr, WNOHANG) == child_pid_)
        return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    ::kill(child_pid_, SIGKILL);
    ::waitpid(child_pid_, nullptr, 0);
  }
}

std::unique_ptr<PeerConnection> PeerConnection::connect_unix(const std::filesystem::path &path) {
  sockaddr_un addr{};
  addr.sun_family = AF_UNIX;
  const std::string p = path.string();
  if (p.size() >= sizeof(addr.sun_path))
    throw DecoderTransportError("socket path too long: " + p);
  std::memcpy(addr.sun_path, p.c_str(), p.size() + 1);
  const int fd = ::socket(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd < 0)
    throw DecoderTransportError(errno_text("socket"));
  if (::connect(fd, reinterpret_cast<sockaddr *>(&addr), sizeof addr) < 0) {
    const std::string msg = errno_text(("connect " + p).c_str());
    ::close(fd);
    throw DecoderTransportError(msg);
  }
  return adopt_socket(fd);
}

std::unique_ptr<PeerConnection> PeerConnection::adopt_socket(int fd) {
  return std::unique_ptr<PeerConnection>(new PeerConnection(fd, fd, true, -1));
}

std::unique_ptr<PeerConnection> PeerConnection::spawn(const std::string &command) {
  ignore_sigpipe();
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) < 0)
    throw DecoderTransportError(errno_text("pipe"));
  if (::pipe2(from_child, O_CLOEXEC) < 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw DecoderTransportError(errno_text("pipe"));
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, to_child[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, from_child[1], STDOUT_FILENO);

  std::string sh = "/bin/sh";
  std::string dash_c = "-c";
  std::string cmd = command;
  char *argv[] = {sh.data(), dash_c.data(), cmd.data(), nullptr};
  pid_t pid = -1;
  const int rc = ::posix_spawn(&pid, "/bin/sh", &actions, nullptr, argv, environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(to_child[0]);
  ::close(from_child[1]);
  if (rc != 0) {
    ::close(to_child[1]);
    ::close(from_child[0]);
    throw DecoderTransportError("cannot spawn '" + command + "': " + std::strerror(rc));
  }
  return std::unique_ptr<PeerConnection>(
      new PeerConnection(from_child[0], to_child[1], false, pid));
}

// ---------------------------------------------------------------------------

ProtocolClient::ProtocolClient(std::unique_ptr<PeerConnection> conn,
                               std::chrono::milliseconds timeout)
    : conn_(std::move(conn)), timeout_(timeout) {
  set_nonblocking(conn_->read_fd());
  set_nonblocking(conn_->write_fd());
  const auto deadline = Clock::now() + timeout_;
  std::string line;
  std::size_t unused = 0;
  while (!pop_line(line))
    fill(deadline, false, {}, unused);
  handshake_ = protocol::parse_handshake(line);
}

bool ProtocolClient::pop_line(std::string &line) {
  const std::size_t nl = inbuf_.find('\n');
  if (nl == std::string::npos)
    return false;
  line.assign(inbuf_, 0, nl);
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  inbuf_.erase(0, nl + 1);
  return true;
}

// Waits until the peer sent more bytes (appended to inbuf_) or, when
// want_write, until some of `out` could be written.
void ProtocolClient::fill(Clock::time_point deadline, bool want_write, std::string_view out,
                          std::size_t &out_pos) {
  const bool same_fd = conn_->read_fd() == conn_->write_fd();
  while (true) {
    const auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (remaining <= 0)
      throw DecoderTransportError("decoder peer timed out after " +
                                  std::to_string(timeout_.count()) + " ms");
    pollfd fds[2];
    int n = 0;
    fds[n++] = {conn_->read_fd(), static_cast<short>(POLLIN | (same_fd && want_write ? POLLOUT : 0)), 0};
    if (want_write && !same_fd)
      fds[n++] = {conn_->write_fd(), POLLOUT, 0};
    const int rc = ::poll(fds, n, static_cast<int>(std::min<long long>(remaining, 1000)));
    if (rc < 0) {
      if (errno == EINTR)
        continue;
      throw DecoderTransportError(errno_text("poll"));
    }
    if (rc == 0)
      continue;

    bool progressed = false;
    const short write_events = same_fd ? fds[0].revents : (n > 1 ? fds[1].revents : 0);
    if (want_write && (write_events & (POLLOUT | POLLERR))) {
      const std::string_view rest = out.substr(out_pos);
      const ssize_t w = conn_->is_socket()
                            ? ::send(conn_->write_fd(), rest.data(), rest.size(), MSG_NOSIGNAL)
                            : ::write(conn_->write_fd(), rest.data(), rest.size());
      if (w < 0 && errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR)
        throw DecoderTransportError(errno_text("write to decoder peer"));
      if (w > 0) {
        out_pos += static_cast<std::size_t>(w);
        progressed = true;
      }
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[65536];
      const ssize_t r = ::read(conn_->read_fd(), buf, sizeof buf);
      if (r == 0)
        throw DecoderTransportError("decoder peer closed the connection");
      if (r < 0 && errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR)
        throw DecoderTransportError(errno_text("read from decoder peer"));
      if (r > 0) {
        inbuf_.append(buf, static_cast<std::size_t>(r));
        progressed = true;
      }
    }
    if (progressed)
      return;
  }
}

std::vector<DecodeResult> ProtocolClient::decode_batch(std::span<const LatentVector> zs) {
  if (broken_)
    throw DecoderTransportError("protocol connection is unusable after an earlier failure");
  try {
    const std::uint64_t base = next_id_;
    next_id_ += zs.size();
    std::string out;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (static_cast<int>(zs[i].size()) != handshake_.latent_dim)
        throw std::invalid_argument("latent vector dimension " + std::to_string(zs[i].size()) +
                                    " does not match peer latent_dim " +
                                    std::to_string(handshake_.latent_dim));
      out += protocol::encode_request(base + i, zs[i]);
      out += '\n';
    }

    std::vector<DecodeResult> results(zs.size());
    std::vector<char> answered(zs.size(), 0);
    std::size_t pending = zs.size();
    std::size_t out_pos = 0;
    const auto deadline = Clock::now() + timeout_;
    std::string line;
    while (pending > 0) {
      while (pending > 0 && pop_line(line)) {
        if (line.empty())
          continue;
        protocol::Response r = protocol::parse_response(line);
        if (r.id < base || r.id - base >= zs.size())
          throw ProtocolError("response carries unknown id " + std::to_string(r.id));
        const std::size_t slot = r.id - base;
        if (answered[slot])
          throw ProtocolError("response id " + std::to_string(r.id) + " answered twice");
        answered[slot] = 1;
        --pending;
        if (r.ok)
          results[slot] = std::move(r.smiles);
      }
      if (pending > 0)
        fill(deadline, out_pos < out.size(), out, out_pos);
    }
    return results;
  } catch (const DecoderTransportError &) {
    broken_ = true;
    throw;
  }
}

// ---------------------------------------------------------------------------

ProtocolDecoder::ProtocolDecoder(ConnectionFactory factory, int pool_size,
                                 std::chrono::milliseconds timeout)
    : factory_(std::move(factory)), timeout_(timeout) {
  if (pool_size < 1)
    throw std::invalid_argument("decoder pool size must be at least 1");
  for (int i = 0; i < pool_size; ++i) {
    auto client = make_client();
    if (i == 0) {
      handshake_ = client->handshake();
    } else if (client->handshake().latent_dim != handshake_.latent_dim) {
      throw ProtocolError("pooled decoder peers disagree on latent_dim");
    }
    idle_.push_back(std::move(client));
  }
}

std::unique_ptr<ProtocolClient> ProtocolDecoder::make_client() {
  return std::make_unique<ProtocolClient>(factory_(), timeout_);
}

std::unique_ptr<ProtocolDecoder> ProtocolDecoder::from_endpoint(std::string_view endpoint,
                                                                int pool_size,
                                                                std::chrono::milliseconds timeout) {
  ConnectionFactory factory;
  if (endpoint.starts_with("exec:")) {
    std::string command(endpoint.substr(5));
    factory = [command] { return PeerConnection::spawn(command); };
  } else {
    std::filesystem::path path(endpoint.starts_with("unix:") ? endpoint.substr(5) : endpoint);
    if (path.empty())
      throw std::invalid_argument("empty decoder endpoint");
    factory = [path] { return PeerConnection::connect_unix(path); };
  }
  return std::make_unique<ProtocolDecoder>(std::move(factory), pool_size, timeout);
}

std::vector<DecodeResult> ProtocolDecoder::decode_batch(std::span<const LatentVector> zs) {
  std::unique_ptr<ProtocolClient> client;
  {
    std::unique_lock lock(mutex_);
    available_.wait(lock, [&] { return !idle_.empty(); });
    client = std::move(idle_.back());
    idle_.pop_back();
  }
  auto give_back = [&] {
    std::lock_guard lock(mutex_);
    idle_.push_back(std::move(client));
    available_.notify_one();
  };
  try {
    if (client->broken())
      client = make_client();
    auto results = client->decode_batch(zs);
    give_back();
    return results;
  } catch (...) {
    give_back();
    throw;
  }
}

// ---------------------------------------------------------------------------

void serve_decoder(int in_fd, int out_fd, Decoder &decoder, const ServeOptions &opts) {
  ignore_sigpipe();
  write_all(out_fd, protocol::encode_handshake({decoder.latent_dim(), decoder.name()}) + "\n");

  std::string inbuf;
  char buf[65536];
  while (true) {
    const ssize_t r = ::read(in_fd, buf, sizeof buf);
    if (r < 0) {
      if (errno == EINTR)
        continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) {
        pollfd p{in_fd, POLLIN, 0};
        ::poll(&p, 1, -1);
        continue;
      }
      throw DecoderTransportError(errno_text("read"));
    }
    if (r == 0)
      return;
    inbuf.append(buf, static_cast<std::size_t>(r));

    std::vector<protocol::Response> responses;
    std::vector<std::size_t> to_decode;
    std::vector<LatentVector> zs;
    std::size_t start = 0;
    for (std::size_t nl; (nl = inbuf.find('\n', start)) != std::string::npos; start = nl + 1) {
      const std::string_view frame(inbuf.data() + start, nl - start);
      if (frame.empty() || frame == "\r")
        continue;
      protocol::Response resp;
      try {
        protocol::Request req = protocol::parse_request(frame);
        resp.id = req.id;
        if (static_cast<int>(req.z.size()) != decoder.latent_dim()) {
          resp.error = "dimension mismatch: expected " + std::to_string(decoder.latent_dim()) +
                       ", got " + std::to_string(req.z.size());
        } else {
          to_decode.push_back(responses.size());
          zs.push_back(std::move(req.z));
        }
      } catch (const ProtocolError &) {
        // A frame without a readable id cannot be answered.
        continue;
      }
      responses.push_back(std::move(resp));
    }
    inbuf.erase(0, start);
    if (responses.empty())
      continue;

    if (!zs.empty()) {
      std::vector<DecodeResult> decoded = decoder.decode_batch(zs);
      for (std::size_t k = 0; k < to_decode.size(); ++k) {
        protocol::Response &resp = responses[to_decode[k]];
        if (k < decoded.size() && decoded[k]) {
          resp.ok = true;
          resp.smiles = std::move(*decoded[k]);
        } else {
          resp.error = "decode failed";
        }
      }
    }
    if (opts.reverse)
      std::reverse(responses.begin(), responses.end());
    std::string out;
    for (const protocol::Response &resp : responses) {
      out += protocol::encode_response(resp);
      out += '\n';
    }
    write_all(out_fd, out);
  }
}

void serve_unix(const std::filesystem::path &path, Decoder &decoder, const ServeOptions &opts) {
  sockaddr_un addr{};
  addr.sun_family = AF_UNIX;
  const std::string p = path.string();
  if (p.size() >= sizeof(addr.sun_path))
    throw DecoderTransportError("socket path too long: " + p);
  std::memcpy(addr.sun_path, p.c_str(), p.size() + 1);
  const int fd = ::socket(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd < 0)
    throw DecoderTransportError(errno_text("socket"));
  ::unlink(p.c_str());
  if (::bind(fd, reinterpret_cast<sockaddr *>(&addr), sizeof addr) < 0 || ::listen(fd, 16) < 0) {
    const std::string msg = errno_text(("bind " + p).c_str());
    ::close(fd);
    throw DecoderTransportError(msg);
  }
  while (true) {
    const int conn = ::accept4(fd, nullptr, nullptr, SOCK_CLOEXEC);
    if (conn < 0) {
      if (errno == EINTR)
        continue;
      const std::string msg = errno_text("accept");
      ::close(fd);
      throw DecoderTransportError(msg);
    }
    std::thread([conn, &decoder, opts] {
      try {
        serve_decoder(conn, conn, decoder, opts);
      } catch (const std::exception &) {
      }
      ::close(conn);
    }).detach();
  }
}

}  // namespace mgb
