//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DECODER_TRANSPORT_H_
#define MGBENCH_DECODER_TRANSPORT_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgbench/decoder/decoder.h"
#include "mgbench/decoder/protocol.h"

namespace mgb {

// A byte stream to a protocol peer. Reads and writes may share one fd
// (sockets) or use two (a child's stdout and stdin).
class PeerConnection {
public:
  ~PeerConnection();
  PeerConnection(const PeerConnection &) = delete;
  PeerConnection &operator=(const PeerConnection &) = delete;

  int read_fd() const { return read_fd_; }
  int write_fd() const { return write_fd_; }
  bool is_socket() const { return is_socket_; }

  static std::unique_ptr<PeerConnection> connect_unix(const std::filesystem::path &path);
  // Runs `command` through /bin/sh -c with its stdin and stdout piped to us.
  static std::unique_ptr<PeerConnection> spawn(const std::string &command);
  // Takes ownership of a connected socket, e.g. one end of a socketpair.
  static std::unique_ptr<PeerConnection> adopt_socket(int fd);

private:
  PeerConnection(int read_fd, int write_fd, bool is_socket, int child_pid);

  int read_fd_;
  int write_fd_;
  bool is_socket_;
  int child_pid_;
};

// One protocol connection. Not thread-safe: one batch in flight at a time.
class ProtocolClient {
public:
  explicit ProtocolClient(std::unique_ptr<PeerConnection> conn,
                          std::chrono::milliseconds timeout = protocol::kDefaultBatchTimeout);

  const protocol::Handshake &handshake() const { return handshake_; }
  // Sends every vector, then collects one response per id in whatever order
  // the peer answers. ok=false responses become failure slots. Throws
  // DecoderTransportError on timeout, EOF, malformed frames, and unknown or
  // repeated ids; the client is unusable afterwards.
  std::vector<DecodeResult> decode_batch(std::span<const LatentVector> zs);
  bool broken() const { return broken_; }

private:
  void fill(std::chrono::steady_clock::time_point deadline, bool want_write, std::string_view out,
            std::size_t &out_pos);
  bool pop_line(std::string &line);

  std::unique_ptr<PeerConnection> conn_;
  std::chrono::milliseconds timeout_;
  protocol::Handshake handshake_;
  std::string inbuf_;
  std::uint64_t next_id_ = 0;
  bool broken_ = false;
};

// Decoder over a pool of protocol connections. Each worker borrows one
// connection for the length of a batch; a connection that failed is replaced
// on its next use.
class ProtocolDecoder: public Decoder {
public:
  using ConnectionFactory = std::function<std::unique_ptr<PeerConnection>()>;

  ProtocolDecoder(ConnectionFactory factory, int pool_size = 1,
                  std::chrono::milliseconds timeout = protocol::kDefaultBatchTimeout);

  // endpoint: "unix:<path>", "exec:<shell command>", or a bare socket path.
  static std::unique_ptr<ProtocolDecoder> from_endpoint(
      std::string_view endpoint, int pool_size = 1,
      std::chrono::milliseconds timeout = protocol::kDefaultBatchTimeout);

  std::vector<DecodeResult> decode_batch(std::span<const LatentVector> zs) override;
  int latent_dim() const override { return handshake_.latent_dim; }
  std::string name() const override { return handshake_.name; }

private:
  std::unique_ptr<ProtocolClient> make_client();

  ConnectionFactory factory_;
  std::chrono::milliseconds timeout_;
  protocol::Handshake handshake_;
  std::mutex mutex_;
  std::condition_variable available_;
  std::vector<std::unique_ptr<ProtocolClient>> idle_;
};

struct ServeOptions {
  // Answer each batch of buffered requests in reverse order. Exercises the
  // client's reordering.
  bool reverse = false;
};

// Speaks the peer side of the protocol for `decoder` until in_fd reaches EOF.
void serve_decoder(int in_fd, int out_fd, Decoder &decoder, const ServeOptions &opts = {});

// Accepts connections on a unix socket and serves each on its own thread.
// Returns only on error.
void serve_unix(const std::filesystem::path &path, Decoder &decoder,
                const ServeOptions &opts = {});

}  // namespace mgb

#endif  // MGBENCH_DECODER_TRANSPORT_H_
