//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_EVALUATION_H_
#define MGBENCH_HARNESS_EVALUATION_H_

#include <cstddef>
#include <span>
#include <string>

#include "mgbench/decoder/decoder.h"
#include "mgbench/fingerprint/fingerprint.h"

namespace mgb {

// Reconstruction quality of an encoder/decoder pair.
struct EvalMetrics {
  std::size_t n = 0;
  // Position-wise agreement of atomwise tokens over each target's tokens plus
  // its end marker, pooled over all targets.
  double token_accuracy = 0.0;
  // Decoded canonical form equals the target's.
  double molecule_accuracy = 0.0;
  // Mean Tanimoto between target and decoded fingerprints; 0 for invalid
  // decodes.
  double tanimoto_accuracy = 0.0;
  double validity = 0.0;
};

// targets[i] must be a parseable SMILES; decoded[i] is what came back for it.
EvalMetrics evaluate_reconstruction(std::span<const std::string> targets,
                                    std::span<const DecodeResult> decoded,
                                    int n_bits = kDefaultFingerprintBits);

}  // namespace mgb

#endif  // MGBENCH_HARNESS_EVALUATION_H_
