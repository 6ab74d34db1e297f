//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DECODER_DECODER_H_
#define MGBENCH_DECODER_DECODER_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgb {

using LatentVector = std::vector<double>;

// One slot per input vector: a SMILES string, or nullopt when the decoder
// produced nothing for that vector.
using DecodeResult = std::optional<std::string>;

// Connection-level failure (peer gone, timeout, malformed frame). Per-vector
// failures are reported as empty DecodeResult slots instead.
class DecoderTransportError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Maps latent vectors to SMILES. Implementations must be safe to call from
// several threads at once and must return exactly one result per input, in
// input order.
class Decoder {
public:
  virtual ~Decoder() = default;

  virtual std::vector<DecodeResult> decode_batch(std::span<const LatentVector> zs) = 0;
  virtual int latent_dim() const = 0;
  virtual std::string name() const = 0;
};

}  // namespace mgb

#endif  // MGBENCH_DECODER_DECODER_H_
