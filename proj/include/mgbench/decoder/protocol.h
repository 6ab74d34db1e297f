//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DECODER_PROTOCOL_H_
#define MGBENCH_DECODER_PROTOCOL_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mgbench/decoder/decoder.h"

namespace mgb::protocol {

// Frames are single-line JSON objects terminated by '\n'.
//   peer handshake: {"latent_dim": <int>, "name": <string>}
//   request:        {"id": <u64>, "z": [<reals>]}
//   response:       {"id": <u64>, "ok": <bool>, "smiles": <string, iff ok>}
// A failed response may carry an optional "error" string.

class ProtocolError: public DecoderTransportError {
public:
  using DecoderTransportError::DecoderTransportError;
};

struct Handshake {
  int latent_dim = 0;
  std::string name;
};

struct Request {
  std::uint64_t id = 0;
  LatentVector z;
};

struct Response {
  std::uint64_t id = 0;
  bool ok = false;
  std::string smiles;
  std::string error;
};

std::string encode_handshake(const Handshake &h);
std::string encode_request(std::uint64_t id, const LatentVector &z);
std::string encode_response(const Response &r);

// Each parser takes one frame without its trailing newline and throws
// ProtocolError when the frame is malformed.
Handshake parse_handshake(std::string_view frame);
Request parse_request(std::string_view frame);
Response parse_response(std::string_view frame);

inline constexpr std::chrono::milliseconds kDefaultBatchTimeout{30000};

}  // namespace mgb::protocol

#endif  // MGBENCH_DECODER_PROTOCOL_H_
